#!/usr/bin/env python3
"""Validate CLI JSON reports against the schema and against the table view.

usage: check_report.py <arborslope-binary> <report.schema.json>
"""
import json
import subprocess
import sys

import jsonschema

CASES = [
    ["slopes", "(-1/2 + 1/3) o (-1/2 + 1/3)"],
    ["slopes", "(1/2 + 1/3 + -1/5) o (2/3 + -1/4)"],
    ["slopes", "-1/2 + 1/3 + 1/7"],
    ["slopes", "1/3 o 1/5"],
    ["kn", "--n", "3"],
]


def run(cli, args):
    return subprocess.run([cli, *args], capture_output=True, text=True)


def table_slopes(text):
    lines = text.splitlines()
    start = next(i for i, line in enumerate(lines) if line.split()[:2] == ["slope", "systems"])
    return [line.split()[0] for line in lines[start + 1:] if line.strip()]


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failed = 0
    for args in CASES:
        js = run(cli, [*args, "--format", "json"])
        tb = run(cli, [*args, "--format", "table"])
        label = " ".join(args)
        if js.returncode not in (0, 3) or js.returncode != tb.returncode:
            print(f"FAIL {label}: exit codes {js.returncode} and {tb.returncode}")
            failed += 1
            continue
        doc = json.loads(js.stdout)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            print(f"FAIL {label}: {errors[0].message} at {list(errors[0].path)}")
            failed += 1
            continue
        if (js.returncode == 3) != (not doc["slopes"]):
            print(f"FAIL {label}: exit {js.returncode} with {len(doc['slopes'])} slopes")
            failed += 1
            continue
        if table_slopes(tb.stdout) != doc["slopes"]:
            print(f"FAIL {label}: table and json slope lists differ")
            failed += 1
            continue
        print(f"ok   {label}: {len(doc['slopes'])} slopes, {len(doc['systems'])} systems")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
