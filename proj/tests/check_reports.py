"""Run every subcommand with --format json and validate against the schema."""

import json
import subprocess
import sys

import jsonschema

RUNS = [
    (["index"], "Bg\nBw\nC~\n"),
    (["dumbbell", "--spec", "2,7,4,-2", "--graph6"], ""),
    (["two-step", "--n-from", "190", "--n-to", "192"], ""),
    (["search", "-n", "7"], ""),
    (["search", "-n", "6", "--omit-timing", "--index", "balaban"], ""),
    (["verify-figures", "--ns", "3,4,5"], ""),
    (["constants"], ""),
    (["converge", "--ns", "100,1000"], ""),
    (["c1-scan", "--n-from", "10", "--n-to", "20"], ""),
    (["c3-check", "--n-from", "3", "--n-to", "6"], ""),
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    for args, stdin in RUNS:
        proc = subprocess.run([binary, *args, "--format", "json"], input=stdin, capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=str)
        if errors:
            print(f"FAIL {label}: {errors[0].message}")
            failures += 1
        else:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
