"""Run the charge rules on two classic solids and read the books.

Every vertex and face starts at d(x) - 4; the total is -8 by Euler's
formula and stays -8 after every phase.  The dodecahedron violates the
variant hypotheses (it has 9-cycles), so the engine runs in lab mode and
flags that in the report.
"""

import math

from dpcolor import apply_rules, audit, format_transfer_log, from_edge_list, trace_faces


def dodecahedron():
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 1) % 10) for i in range(10)]
    edges += [(15 + i, 15 + (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + 2 * i) for i in range(5)]
    edges += [(6 + 2 * i, 15 + i) for i in range(5)]
    g = from_edge_list(edges)
    coords = []
    for ring, radius, count, offset in ((0, 10, 5, 0.0), (5, 6, 10, 0.0),
                                        (15, 3, 5, 1.0)):
        for i in range(count):
            a = math.pi / 2 + 2 * math.pi * (2 * i + offset) / (2 * count)
            coords.append((radius * math.cos(a), radius * math.sin(a)))
    rot = []
    for v in range(g.n):
        cx, cy = coords[v]
        rot.append(tuple(sorted(
            g.adj[v],
            key=lambda u: math.atan2(coords[u][1] - cy, coords[u][0] - cx))))
    return trace_faces(g, rot)


emb = dodecahedron()
print("== dodecahedron, variant b67 ==")
state = apply_rules(emb, "b67")
print(f"total after every phase: {[str(t) for _, t in state.phase_totals]}")
print(f"every 3-vertex ends at: {set(map(str, state.vertex_charge))}")
print(f"every 5-face ends at: {set(map(str, state.face_charge))}")
print(f"first transfers:")
for t in state.log[:3]:
    print(f"  {t.phase} {t.rule}: {t.source} -> {t.sink}  {t.amount}")
print()
report = audit(emb, "b67")
print(report.format())
print()
print("== transfer log format ==")
print("\n".join(format_transfer_log(state).splitlines()[:4]))
