"""Scan every connected girth >= 5 graph on at most ten vertices with
Delta >= 3 and report how far chi_D sits below Delta + 1.

    python notebooks/03_conjecture_scan.py
"""
from collections import Counter
from pathlib import Path

from distcolor import scan_conjecture
from distcolor.graph import iter_graph6

census = Path(__file__).parent.parent / "tests" / "data" / "girth5_connected_upto10.g6"
with open(census) as fh:
    report = scan_conjecture(10, list(iter_graph6(fh)))

print(report.lines()[-1])
by_gap = Counter(e["delta"] + 1 - e["chid"] for e in report.entries if "chid" in e)
for gap in sorted(by_gap):
    print(f"Δ+1-χ_D = {gap}: {by_gap[gap]} graphs")
