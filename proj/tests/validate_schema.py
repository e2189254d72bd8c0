"""Validate ncsieve csp JSON reports against the shipped schema."""
import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["csp", "--group", "A2", "--m", "2", "--mode", "phi"],
    ["csp", "--group", "B2", "--m", "1", "--mode", "psi"],
    ["csp", "--group", "H3", "--m", "1", "--mode", "phi", "--divisors-only"],
    ["csp", "--group", "G4", "--m", "2", "--mode", "psi"],
]


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    failed = 0
    for args in RUNS:
        proc = subprocess.run([exe, *args, "--format", "json"], capture_output=True, text=True)
        name = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {name}: exit {proc.returncode}: {proc.stderr.strip()}")
            failed += 1
            continue
        try:
            report = json.loads(proc.stdout)
            jsonschema.validate(report, schema, cls=jsonschema.Draft202012Validator)
        except (json.JSONDecodeError, jsonschema.ValidationError) as err:
            print(f"FAIL {name}: {err}")
            failed += 1
            continue
        print(f"ok   {name}: {len(report['entries'])} entries")
    bad = {"group": "A2", "m": 0, "mode": "phi", "entries": [], "pass": True}
    try:
        jsonschema.validate(bad, schema, cls=jsonschema.Draft202012Validator)
        print("FAIL schema accepts a malformed report")
        failed += 1
    except jsonschema.ValidationError:
        print("ok   malformed report rejected")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
