"""Runs the CLI with --json and validates every document against docs/cli.schema.json."""

import json
import subprocess
import sys

import jsonschema

BIN, SCHEMA = sys.argv[1], sys.argv[2]

# (arguments, expected exit code)
CASES = [
    (["factor", "--n", "7", "--q", "3"], 0),
    (["factor", "--n", "1", "--q", "3"], 0),
    (["factor", "--n", "3", "--q", "3"], 2),
    (["cosets", "--n", "13", "--q", "3"], 0),
    (["reversible", "list", "--n", "7", "--q", "3"], 0),
    (["reversible", "count", "--n", "13", "--q", "3"], 0),
    (["reversible", "count", "--n", "10", "--q", "3"], 0),
    (["bch", "--q", "3", "--n", "14", "--delta", "3"], 0),
    (["bch", "--q", "3", "--n", "14", "--delta", "3", "--b", "2"], 2),
    (["bch", "--family", "sec4", "--q", "3", "--ell", "3", "--delta", "3"], 0),
    (["bch", "--family", "sec4", "--q", "3", "--ell", "3", "--delta", "4"], 2),
    (["bch", "--family", "sec4", "--q", "3", "--ell", "3", "--delta", "4", "--allow-out-of-range"], 0),
    (["bch", "--family", "sec58", "--q", "5", "--m", "4", "--delta", "13"], 1),
    (["bch", "--family", "sec513", "--q", "3", "--t", "2", "--tau", "2", "--delta", "3"], 0),
    (["sweep", "sec4", "--q", "3", "--ell", "3"], 0),
    (["sweep", "sec4", "--q", "3", "--ell", "1"], 2),
    (["sweep", "sec52", "--q", "5", "--m", "4", "--delta-max", "4", "--no-distance"], 0),
    (["sweep", "sec56", "--q", "3", "--m", "4"], 1),
    (["sweep", "sec513", "--q", "3", "--t", "2", "--tau", "2", "--no-distance"], 0),
    (["mds", "--q", "13", "--n", "6", "--rho", "1"], 0),
    (["mds", "--q", "5", "--n", "4", "--rho", "0"], 0),
    (["mds", "--q", "5", "--n", "6", "--rho", "0"], 2),
    (["mds", "--table"], 0),
    (["distance", "--q", "3", "--n", "14", "--delta", "4"], 0),
    (["distance", "--q", "3", "--n", "7", "--generator", "1,1"], 0),
    (["distance", "--q", "3", "--n", "7", "--defining-set", "7"], 0),
    (["distance", "--q", "3", "--n", "7", "--defining-set", "3"], 2),
    (["verify", "3.6"], 0),
    (["verify", "5.10"], 1),
    (["verify", "5.14"], 0),
    (["verify", "6.2"], 0),
]


def run(args, env=None):
    return subprocess.run([BIN, "--json", *args], capture_output=True, text=True, env=env)


def main():
    with open(SCHEMA) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args, code in CASES:
        p = run(args)
        label = " ".join(args)
        try:
            doc = json.loads(p.stdout)
            validator.validate(doc)
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            print(f"FAIL {label}: {str(e).splitlines()[0]}")
            failures += 1
            continue
        if p.returncode != code:
            print(f"FAIL {label}: exit {p.returncode}, expected {code}")
            failures += 1
            continue
        print(f"ok   {label}")

    # verify output is byte-identical across runs and thread counts.
    outs = {run(["--threads", t, "verify", "4.6"]).stdout for t in ("1", "2", "4")}
    outs.add(run(["verify", "4.6"]).stdout)
    if len(outs) != 1:
        print("FAIL verify 4.6 differs across thread counts")
        failures += 1
    else:
        print("ok   verify 4.6 deterministic")

    # The environment budget reaches the distance search.
    env = {"NEGACODE_BUDGET": "1000", "PATH": ""}
    doc = json.loads(run(["distance", "--q", "3", "--n", "41", "--delta", "3"], env).stdout)
    if doc["code"]["distance"] is not None:
        print("FAIL NEGACODE_BUDGET ignored")
        failures += 1
    else:
        print("ok   NEGACODE_BUDGET")

    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
