"""Walk through the level-by-level labeler on two graphs.

The spider (three legs of length three) labels greedily.  The Heawood graph
shows the repair step and the one place where label 0 is reused.

    python notebooks/01_level_construction.py
"""
from distcolor import FamilySpec, Graph, generate, verify
from distcolor.constructive import construct_bipartite_girth6


def show(name, g):
    con = construct_bipartite_girth6(g)
    f = con.labeling.labels
    print(f"== {name}: n={g.n} m={g.m} Δ={g.max_degree} root={con.root}")
    for i, level in enumerate(con.tree.levels()):
        cells = " ".join(f"{v}:{f[v]}" for v in level)
        print(f"  level {i}: {cells}")
    print(f"  zero reused on: {list(con.zero_reused) or 'none'}")
    print(f"  {verify(g, f)}\n")


spider = Graph(10, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6), (0, 7), (7, 8), (8, 9)])
show("spider", spider)
show("heawood", generate(FamilySpec("heawood")))
