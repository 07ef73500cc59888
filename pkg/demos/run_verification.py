"""
Re-checking every claim
=======================

Run the full verification for small ranges and print the evidence lines.
The same report is produced by ``hopfplumb verify``.
"""
from hopfplumb.verify import run_verification

report = run_verification(g_max=3, n_max=4, oracle_trials=50)
for line in report.lines():
    print(line)
