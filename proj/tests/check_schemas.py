"""Validate the CLI's JSON output against the schemas in schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ("chamber", ["chamber", "--u", "5/2,1/4", "--json"], 0),
    ("chamber", ["chamber", "--u", "2,1/2", "--json"], 0),
    ("strata", ["strata", "--u", "7/2,1/3", "--g", "2", "--json"], 0),
    ("strata", ["strata", "--u", "7/2,1/3", "--wide", "3", "--json"], 0),
    ("plan", ["plan", "--from", "5/2,1/4", "--to", "9/4,1/8", "--json"], 0),
    ("plan", ["plan", "--from", "5/2,1/4", "--to", "11/4,1/2", "--label", "B-2F", "--json"], 0),
    ("plan", ["plan", "--from", "7/2,1/4", "--to", "13/4,1/8", "--label", "B-3F-E", "--json"], 0),
    ("plan", ["plan", "--from", "5/2,1/4", "--to", "5/2,1/4", "--json"], 0),
    ("stability", ["verify-stability", "--g", "1", "--mu-max", "3", "--step", "1/4", "--json"], 3),
    ("stability", ["verify-stability", "--g", "1", "--mu-max", "3", "--step", "1/4", "--x", "0", "--json"], 0),
    ("decompose", ["decompose", "--g", "2", "--report-sections", "--json"], 0),
    ("report", ["report", "--g", "1", "--mu-max", "3", "--step", "1/4"], 3),
]


def main() -> int:
    exe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for name, args, want_code in CASES:
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        proc = subprocess.run([exe, *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != want_code:
            print(f"FAIL {label}: exit {proc.returncode}, expected {want_code}\n{proc.stderr}")
            failures += 1
            continue
        try:
            jsonschema.validate(json.loads(proc.stdout), schema)
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            print(f"FAIL {label}: {e}")
            failures += 1
            continue
        print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
