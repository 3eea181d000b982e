"""Run the theorem harness over every labelled graph up to a given size.

    python3 demos/exhaustive_check.py 5
"""
import sys
import time

from implicol import SuiteConfig, run_theorem_suite

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 5
start = time.monotonic()
verdicts = run_theorem_suite(SuiteConfig(max_n=max_n),
                             progress=lambda n, top: print(f"  finished n={n} of {top}", flush=True))
for v in verdicts:
    print(f"{v.theorem_id:28} {v.status:12} {v.instances_checked:>9}")
print(f"{time.monotonic() - start:.1f}s")
