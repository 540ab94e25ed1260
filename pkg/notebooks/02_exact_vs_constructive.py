"""Compare constructive label counts with exact chi_D on the small
bipartite girth >= 6 census, and print the gap distribution.

    python notebooks/02_exact_vs_constructive.py
"""
from collections import Counter
from pathlib import Path

from distcolor import distinguishing_chromatic_number, label_bipartite_girth6
from distcolor.graph import iter_graph6

census = Path(__file__).parent.parent / "tests" / "data" / "bip_girth6_connected_upto12.g6"
gaps = Counter()
with open(census) as fh:
    for g in iter_graph6(fh):
        if g.max_degree < 3 or g.n > 10:
            continue
        built = label_bipartite_girth6(g).labels_used
        exact = distinguishing_chromatic_number(g, constructive_bound=False).value
        assert exact <= built <= g.max_degree + 1
        gaps[(g.max_degree, built - exact)] += 1

print("Δ  constructive-exact  graphs")
for (delta, gap), count in sorted(gaps.items()):
    print(f"{delta}  {gap:>18}  {count:>6}")
