"""Simple undirected graphs: construction, file formats, degree and cycle queries.

Vertices are dense integer indices 0..n-1.  File formats may carry other
labels; those are mapped to dense indices on ingestion.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = [
    "Graph",
    "CycleSpectrum",
    "SelfLoop",
    "MalformedGraph6",
    "from_edge_list",
    "parse_graph6",
    "encode_graph6",
    "parse_edge_list",
    "cycle_spectrum",
    "satisfied_variants",
    "FORBIDDEN_VARIANTS",
    "delete_vertices",
    "is_connected",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "complete_bipartite",
]


class SelfLoop(ValueError):
    """An edge joins a vertex to itself."""


class MalformedGraph6(ValueError):
    """Input is not a valid graph6 string."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    edges holds pairs (u, v) with u < v; adj[v] is the neighbor set of v.
    No self-loops, no parallel edges.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[frozenset[int], ...] = field(compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(pairs, n: int | None = None) -> Graph:
    """Build a Graph from vertex pairs; duplicates collapse, self-loops raise.

    n defaults to one more than the largest vertex mentioned (isolated
    trailing vertices need an explicit n).
    """
    edges = set()
    top = -1
    for u, v in pairs:
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if u < 0 or v < 0:
            raise ValueError(f"negative vertex in edge ({u}, {v})")
        edges.add((u, v) if u < v else (v, u))
        top = max(top, u, v)
    if n is None:
        n = top + 1
    elif top >= n:
        raise ValueError(f"edge mentions vertex {top} but n={n}")
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n=n, edges=frozenset(edges), adj=tuple(frozenset(a) for a in adj))


def complete_graph(n: int) -> Graph:
    return from_edge_list([(i, j) for i in range(n) for j in range(i + 1, n)], n=n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edge_list([(i, (i + 1) % n) for i in range(n)], n=n)


def path_graph(n: int) -> Graph:
    return from_edge_list([(i, i + 1) for i in range(n - 1)], n=n)


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list([(i, a + j) for i in range(a) for j in range(b)], n=a + b)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


# ---------------------------------------------------------------------------
# graph6 interchange format (printable bytes offset by 63).

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    if s[0] in ":;&":
        raise MalformedGraph6("sparse6/digraph6 input is not supported")
    vals = []
    for ch in s:
        x = ord(ch) - 63
        if not 0 <= x <= 63:
            raise MalformedGraph6(f"byte {ch!r} out of graph6 range")
        vals.append(x)
    if vals[0] < 63:
        n = vals[0]
        idx = 1
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        idx = 4
    elif len(vals) >= 8:
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        idx = 8
    else:
        raise MalformedGraph6("truncated vertex count")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - idx != need:
        raise MalformedGraph6(
            f"expected {need} adjacency bytes for n={n}, got {len(vals) - idx}"
        )
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            word = vals[idx + bit // 6]
            if (word >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    # padding bits beyond the triangle must be zero
    if nbits % 6:
        tail = vals[-1] & ((1 << (6 - nbits % 6)) - 1)
        if tail:
            raise MalformedGraph6("nonzero padding bits")
    return from_edge_list(edges, n=n)


def encode_graph6(g: Graph) -> str:
    """Encode a Graph as a graph6 string (inverse of parse_graph6)."""
    n = g.n
    if n <= 62:
        head = [n]
    elif n <= 258047:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> (6 * i)) & 63 for i in range(5, -1, -1)]
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    words = [
        (bits[i] << 5) | (bits[i + 1] << 4) | (bits[i + 2] << 3)
        | (bits[i + 3] << 2) | (bits[i + 4] << 1) | bits[i + 5]
        for i in range(0, len(bits), 6)
    ]
    return "".join(chr(x + 63) for x in head + words)


def parse_edge_list(text: str) -> tuple[Graph, tuple[str, ...]]:
    """Parse plain edge-list text: one "u v" pair per line, '#' comments.

    Labels may be arbitrary tokens; they are mapped to dense indices in
    order of first appearance.  Returns (graph, labels).
    """
    labels: dict[str, int] = {}

    def intern(tok: str) -> int:
        if tok not in labels:
            labels[tok] = len(labels)
        return labels[tok]

    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        pairs.append((intern(parts[0]), intern(parts[1])))
    g = from_edge_list(pairs, n=len(labels))
    return g, tuple(labels)


# ---------------------------------------------------------------------------
# Cycle queries.

@dataclass(frozen=True)
class CycleSpectrum:
    """Exact set of cycle lengths present up to a search bound."""

    present: frozenset[int]
    search_bound: int

    def has(self, length: int) -> bool:
        if length > self.search_bound:
            raise ValueError(f"length {length} beyond search bound {self.search_bound}")
        return length in self.present


def cycle_spectrum(g: Graph, max_len: int = 9) -> CycleSpectrum:
    """Exact set of lengths l <= max_len for which g contains a cycle.

    DFS over paths whose interior vertices all exceed the start vertex, so
    each cycle is found from its smallest vertex.  Stops early once every
    length in 3..max_len is witnessed.
    """
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    found: set[int] = set()
    want = max_len - 2  # number of distinct lengths 3..max_len
    adj = g.adj
    on_path = [False] * g.n
    path_len = 0

    def dfs(start: int, v: int) -> None:
        nonlocal path_len
        for u in adj[v]:
            if len(found) == want:
                return
            if u == start and path_len >= 3:
                found.add(path_len)
            elif u > start and not on_path[u] and path_len < max_len:
                on_path[u] = True
                path_len += 1
                dfs(start, u)
                path_len -= 1
                on_path[u] = False

    for s in range(g.n):
        if len(found) == want:
            break
        on_path[s] = True
        path_len = 1
        dfs(s, s)
        on_path[s] = False
    return CycleSpectrum(present=frozenset(found), search_bound=max_len)


#: The three forbidden-cycle hypothesis sets, keyed by short name.
FORBIDDEN_VARIANTS: dict[str, frozenset[int]] = {
    "a": frozenset({4, 7, 8, 9}),
    "b67": frozenset({4, 6, 7, 9}),
    "b68": frozenset({4, 6, 8, 9}),
}


def satisfied_variants(g: Graph) -> set[str]:
    """Which of the three forbidden-cycle hypothesis sets g satisfies.

    A variant is satisfied when g has no cycle of any listed length.
    """
    spectrum = cycle_spectrum(g, max_len=9).present
    return {
        name for name, lengths in FORBIDDEN_VARIANTS.items()
        if not (lengths & spectrum)
    }


def delete_vertices(g: Graph, drop) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on V minus drop, plus the old->new index map."""
    drop = set(drop)
    if not drop <= set(range(g.n)):
        raise ValueError("vertices to delete must lie in 0..n-1")
    keep = [v for v in range(g.n) if v not in drop]
    remap = {old: new for new, old in enumerate(keep)}
    edges = [
        (remap[u], remap[v])
        for u, v in g.edges
        if u not in drop and v not in drop
    ]
    return from_edge_list(edges, n=len(keep)), remap
