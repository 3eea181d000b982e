"""Walk through implicit edges and identities on a few small graphs.

Run with ``python3 demos/implicit_edges_tour.py``.
"""
from implicol import (PairStatus, chromatic_number, chromatic_polynomial, connecting_chain_report,
                      enumerate_k_colorings, explicit_graph, explicit_neighborhood, identify_vertices,
                      path_graph, to_dot)
from implicol.fixtures import FIG1A


def show_relations(name, g, k):
    report = explicit_graph(g, k)
    print(f"{name}: n={g.n} m={g.m} chi={chromatic_number(g)} k={k}")
    for pc in report.classifications:
        if pc.status not in (PairStatus.FREE, PairStatus.PLAIN_EDGE):
            print(f"  {pc.pair}: {pc.status.value}")
    print(f"  added by the closure: {report.added_edges()}")
    return report


# a path on four vertices: the ends always get different colours at k=2
p4 = path_graph(4)
report = show_relations("path P4", p4, 2)
print("  closure is a 4-cycle:", report.explicit_graph.edges())

# the small 3-chromatic graph with one dashed pair
g = FIG1A.graph
fig = show_relations("fig1a", g, 3)
print("  explicit neighbourhood of 1:", sorted(explicit_neighborhood(g, 3, 1)))

# merging an implicit edge kills every 3-colouring
merged, _ = identify_vertices(g, 1, 4)
print("  P(G) =", chromatic_polynomial(g))
print("  P(G/14) at 3 =", chromatic_polynomial(merged)(3))

# every 3-colouring links 1 and 4 by a two-coloured chain
for col in enumerate_k_colorings(g, 3):
    rep = connecting_chain_report(g, col, 1, 4)
    print("  colouring", [col[v] for v in g.vertices], "edge chain:", rep.edge_chain)

print()
# dashed lines are the non-drawn implicit edges, dotted ones the identities
print(to_dot(g, fig))
