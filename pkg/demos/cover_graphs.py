"""Walk through the core objects: matching assignments, cover graphs, and
how proper coloring and list coloring are special cases."""

from dpcolor import (MatchingAssignment, build_cover, cycle_graph,
                     find_coloring, from_list_assignment, uniform_lists)

g = cycle_graph(4)
k = 2
lists = uniform_lists(g.n, k)

print("== cover graph of C4 with identity matchings ==")
ident = MatchingAssignment.identity(g, k)
cover = build_cover(g, lists, ident)
print(f"nodes: {cover.node_count} (one per vertex/color pair)")
print(f"edges: {cover.edge_count} (per-vertex cliques + matched pairs)")
print("a coloring is an independent set picking one node per vertex")

print()
print("== identity matchings are exactly proper coloring ==")
coloring = find_coloring(g, lists, ident)
print(f"C4 with identity matchings, k=2: {coloring}")

print()
print("== one twisted edge changes everything ==")
twist = MatchingAssignment.from_permutations(g, k, {(0, 3): (1, 0)})
print(f"C4 with a single swapped edge, k=2: {find_coloring(g, lists, twist)}")
print("(no coloring: the twist makes the even cycle behave like an odd one)")

print()
print("== list coloring as a matching assignment ==")
original = ((1, 2), (2, 3), (1, 3), (2, 4))
relabeled, matching = from_list_assignment(g, original)
print(f"original lists: {original}")
for u, v in sorted(g.edges):
    print(f"  edge ({u}, {v}) matches positions {matching.pairs(u, v)}")
coloring = find_coloring(g, relabeled, matching)
decoded = tuple(sorted(original[v])[coloring[v]] for v in range(g.n))
print(f"coloring in original colors: {decoded}")
