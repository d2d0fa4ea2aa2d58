#!/usr/bin/env python3
"""Validates CLI JSON output against schema/report.schema.json."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

runs = [
    ["classify", "--type", "G", "--rank", "2", "--support", "2"],
    ["classify", "--type", "A", "--rank", "2", "--support", "1,2", "--regularity"],
    ["classify", "--type", "A", "--rank", "4", "--support", "2"],
    ["classify", "--type", "A", "--rank", "3", "--support", "1,2", "--oracle"],
    ["classify", "--type", "B3xG2", "--support", "3,4"],
    ["scan", "--type", "B", "--rank", "3", "--regularity"],
    ["scan", "--type", "D", "--rank", "4"],
]
failures = 0
for args in runs:
    out = subprocess.run([cli, *args, "-q"], check=True, capture_output=True, text=True).stdout
    doc = json.loads(out)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
    label = " ".join(args)
    if errors:
        failures += 1
        print(f"FAIL {label}: {errors[0].message}")
    else:
        print(f"ok   {label}")
    again = subprocess.run([cli, *args, "-q"], check=True, capture_output=True, text=True).stdout
    if again != out:
        failures += 1
        print(f"FAIL {label}: output not deterministic")
sys.exit(1 if failures else 0)
