#!/usr/bin/env python3
"""Compare the CLI's Montesinos candidates with the reference enumeration.

usage: check_oracle.py <arborslope-binary> <montesinos_reference.py>
"""
import importlib.util
import json
import subprocess
import sys
from fractions import Fraction as F

EXPRESSIONS = [
    "-1/2 + 1/3 + 1/7",
    "-1/2 + 1/3 + 1/4",
    "-1/2 + 1/3 + 1/5",
    "1/2 + 1/3 + -1/5",
    "-1/2 + 2/5 + 1/3",
    "1/4 + -1/3 + 1/3",
]


def load_reference(path):
    spec = importlib.util.spec_from_file_location("montesinos_reference", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def main():
    cli, ref_path = sys.argv[1], sys.argv[2]
    ref = load_reference(ref_path)
    failed = 0
    for expr in EXPRESSIONS:
        leaves = [F(t.strip()) for t in expr.split("+")]
        expected = {(u, t) for u, t in ref.interior_taus(leaves, "triple") + ref.zero_taus(leaves)}
        proc = subprocess.run([cli, "slopes", expr, "--format", "json"], capture_output=True, text=True)
        if proc.returncode not in (0, 3):
            print(f"FAIL {expr}: exit {proc.returncode}: {proc.stderr.strip()}")
            failed += 1
            continue
        doc = json.loads(proc.stdout)
        actual = {(F(s["u"]), F(s["tau"])) for s in doc["systems"] if not s["via_achirality"]}
        if actual != expected:
            print(f"FAIL {expr}")
            print("  reference only:", sorted((str(u), str(t)) for u, t in expected - actual))
            print("  cli only:      ", sorted((str(u), str(t)) for u, t in actual - expected))
            failed += 1
        else:
            print(f"ok   {expr}: {len(expected)} (u, tau) pairs")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
