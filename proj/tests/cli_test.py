#!/usr/bin/env python3
"""End-to-end checks of the voa command line: output values, exit-code
contract, and byte-determinism of JSON reports."""

import json
import subprocess
import sys
import tempfile
import os

FAILURES = []


def run(args, stdin=None):
    return subprocess.run(args, capture_output=True, text=True, input=stdin)


def check(name, condition, detail=""):
    if condition:
        print(f"pass  {name}")
    else:
        print(f"FAIL  {name}  {detail}")
        FAILURES.append(name)


def main():
    if len(sys.argv) != 2:
        print("usage: cli_test.py <path-to-voa>")
        return 2
    voa = sys.argv[1]

    # table1: exact distinct sets for k = 3 and k = 2.
    r = run([voa, "table1", "--k", "3", "--format", "json"])
    check("table1 k=3 exit", r.returncode == 0, r.stderr)
    data = json.loads(r.stdout)
    check(
        "table1 k=3 values",
        sorted(data["distinct"]) == sorted(["0", "1", "1/12", "1/3", "3/4",
                                            "1/16", "9/16"]),
        str(data["distinct"]),
    )
    expected_tables = {
        "2": ["0", "1", "1/8", "1/2", "1/16", "9/16"],
        "5": ["0", "1", "1/20", "1/5", "9/20", "4/5", "5/4", "1/16", "9/16"],
        "7": ["0", "1", "1/28", "1/7", "9/28", "4/7", "25/28", "9/7",
              "7/4", "1/16", "9/16"],
    }
    for k, values in expected_tables.items():
        r = run([voa, "table1", "--k", k, "--format", "json"])
        data = json.loads(r.stdout)
        check(
            f"table1 k={k} values",
            sorted(data["distinct"]) == sorted(values),
            str(data["distinct"]),
        )

    # Usage errors exit with 2.
    r = run([voa, "table1", "--k", "0"])
    check("table1 k=0 usage error", r.returncode == 2, str(r.returncode))
    r = run([voa, "verify", "--suite", "nonsense", "--k", "3"])
    check("unknown suite usage error", r.returncode == 2, str(r.returncode))
    r = run([voa, "weights", "--k", "1"])
    check("weights k=1 usage error", r.returncode == 2, str(r.returncode))

    # weights: composite witness for k = 6.
    r = run([voa, "weights", "--k", "6", "--format", "json"])
    check("weights k=6 exit", r.returncode == 0, r.stderr)
    data = json.loads(r.stdout)
    check(
        "weights k=6 witness",
        data["composite_witness"] == {"r": 1, "s": 5, "difference": 1},
        str(data.get("composite_witness")),
    )
    r = run([voa, "weights", "--k", "7", "--format", "json"])
    data = json.loads(r.stdout)
    check("weights k=7 distinct", data["all_distinct"] is True)
    check("weights k=7 no witness", "composite_witness" not in data)

    # verify: a small seeded suite passes and is byte-deterministic.
    args = [voa, "verify", "--suite", "commutators", "--k", "3",
            "--max-weight", "4", "--samples", "25", "--seed", "7",
            "--format", "json"]
    first = run(args)
    second = run(args)
    check("verify commutators exit", first.returncode == 0, first.stderr)
    check("verify deterministic bytes", first.stdout == second.stdout)
    reseeded = run(args[:-4] + ["--seed", "8", "--format", "json"])
    check("verify seed changes output", first.stdout != reseeded.stdout)

    r = run([voa, "verify", "--suite", "identities", "--k", "3",
             "--format", "json"])
    data = json.loads(r.stdout)
    check("verify identities pass", r.returncode == 0 and
          data["status"] == "pass", r.stdout[:200])

    # verify defaults to a JSON report.
    r = run([voa, "verify", "--suite", "identities", "--k", "2"])
    check("verify default json", r.returncode == 0 and
          json.loads(r.stdout)["suite"] == "identities", r.stdout[:120])

    # decompose: direct sum description file, families and exit code.
    with tempfile.TemporaryDirectory() as tmp:
        spec_path = os.path.join(tmp, "sum.json")
        with open(spec_path, "w") as f:
            json.dump([{"module": "Vplus"}, {"module": "Vminus"}], f)
        r = run([voa, "decompose", "--k", "3", "--input", spec_path,
                 "--max-degree", "3", "--format", "json"])
        check("decompose exit", r.returncode == 0, r.stderr)
        data = json.loads(r.stdout)
        families = {f["lowest"]: f["dims"] for f in data["families"]
                    if f["total_dim"] > 0}
        check("decompose families",
              families == {"0": [1, 0, 1, 2], "1": [1, 1, 3, 3]},
              str(families))
        check("decompose residual empty", data["residual_empty"] is True)

        missing = os.path.join(tmp, "missing.json")
        r = run([voa, "decompose", "--k", "3", "--input", missing])
        check("decompose missing file", r.returncode == 2, str(r.returncode))

        doubled_path = os.path.join(tmp, "doubled.json")
        with open(doubled_path, "w") as f:
            json.dump([{"module": "Vplus", "mult": 2}], f)
        r = run([voa, "decompose", "--k", "3", "--input", doubled_path,
                 "--max-degree", "3", "--format", "json"])
        data = json.loads(r.stdout)
        families = {f["lowest"]: f["dims"] for f in data["families"]
                    if f["total_dim"] > 0}
        check("decompose doubled multiplicity",
              families == {"0": [2, 0, 2, 4]}, str(families))

        bad_path = os.path.join(tmp, "bad.json")
        with open(bad_path, "w") as f:
            f.write("{\"module\": \"Vplus\"}")
        r = run([voa, "decompose", "--k", "3", "--input", bad_path])
        check("decompose malformed file", r.returncode == 2,
              str(r.returncode))

    # character: consistent counts, and rejection of a moved coset.
    r = run([voa, "character", "--k", "3", "--coset", "0", "--sign", "+1",
             "--max-weight", "4", "--format", "json"])
    check("character exit", r.returncode == 0, r.stderr)
    data = json.loads(r.stdout)
    rows = {row["weight"]: row["dim"] for row in data["rows"]}
    check("character k=3 prefix",
          [rows.get(w, 0) for w in ["0", "1", "2", "3"]] == [1, 0, 1, 2],
          str(rows))
    r = run([voa, "character", "--k", "3", "--coset", "1", "--sign", "+1"])
    check("character bad projection", r.returncode == 2, str(r.returncode))

    r = run([voa, "character", "--k", "3", "--coset", "0", "--sign", "-1",
             "--max-weight", "3", "--format", "json"])
    data = json.loads(r.stdout)
    rows = {row["weight"]: row["dim"] for row in data["rows"]}
    check("character odd lowest space", rows.get("1") == 1, str(rows))

    # mode: one operator application through stdin.
    state = {
        "sector": {"kind": "untwisted", "coset": 0},
        "terms": [{"parts": ["1"], "label": 0, "coeff": "1"}],
    }
    r = run([voa, "mode", "--k", "3", "--op", "E", "--n", "0", "--in", "-"],
            stdin=json.dumps(state))
    check("mode exit", r.returncode == 0, r.stderr)
    data = json.loads(r.stdout)
    coeffs = {t["label"]: t["coeff"] for t in data["terms"]}
    check("mode E(0) value", coeffs == {"-6": "6", "6": "-6"} or
          coeffs == {-6: "6", 6: "-6"}, str(coeffs))

    # mode: theta projection kills the odd part of a single creation mode.
    r = run([voa, "mode", "--k", "3", "--op", "project", "--sign", "+1",
             "--in", "-"], stdin=json.dumps(state))
    check("mode project exit", r.returncode == 0, r.stderr)
    data = json.loads(r.stdout)
    check("mode project kills odd vector", data["terms"] == [],
          str(data["terms"]))

    print(f"{len(FAILURES)} failure(s)")
    return 1 if FAILURES else 0


if __name__ == "__main__":
    sys.exit(main())
