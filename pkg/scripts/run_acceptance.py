"""Run the acceptance suite and print one PASS/FAIL line per criterion.

    python3 scripts/run_acceptance.py [-k EXPR]
"""
import argparse
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-k", default=None, help="pytest -k expression, e.g. 'criterion_7'")
    args = ap.parse_args()
    cmd = [sys.executable, "-m", "pytest", "-q", "-s", str(ROOT / "tests" / "test_acceptance.py")]
    if args.k:
        cmd += ["-k", args.k]
    proc = subprocess.run(cmd, cwd=ROOT, capture_output=True, text=True)
    lines = [l for l in proc.stdout.splitlines() if "criterion" in l and ("[PASS]" in l or "[FAIL]" in l)]
    # each line appears twice (inline and in the terminal summary); keep the summary copy
    seen = []
    for l in lines:
        l = l.lstrip(".F ")
        if l not in seen:
            seen.append(l)
    print("\n".join(seen))
    if proc.returncode:
        print(proc.stdout[-3000:], file=sys.stderr)
    return proc.returncode


if __name__ == "__main__":
    sys.exit(main())
