"""Cover graphs, matching assignments, and exact DP-coloring search.

A matching assignment gives every edge uv a partial matching between the
color lists L(u) and L(v).  The cover graph has a node per (vertex, color)
pair, a clique on each vertex's list, and exactly the matched pairs between
adjacent lists.  A DP-coloring picks one color per vertex so that no edge's
matched pair is chosen, i.e. an independent transversal of the cover graph.

With identity matchings on uniform lists this is ordinary proper coloring;
with matchings induced by color equality it is list coloring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph

__all__ = [
    "InvalidMatching",
    "NonUniformLists",
    "NotSpanningTree",
    "MatchingAssignment",
    "CoverGraph",
    "uniform_lists",
    "build_cover",
    "find_coloring",
    "is_valid_coloring",
    "from_list_assignment",
    "gauge_normalize",
    "parse_matching_file",
    "format_matching_file",
]

Lists = tuple[tuple[int, ...], ...]


class InvalidMatching(ValueError):
    """A matching violates injectivity or references a missing color."""


class NonUniformLists(ValueError):
    """Operation requires all lists to share one size k."""


class NotSpanningTree(ValueError):
    """The given edge set is not a spanning tree of the graph."""


def uniform_lists(n: int, k: int) -> Lists:
    """Lists [0..k-1] for every vertex."""
    if k < 1:
        raise ValueError("lists must be nonempty")
    base = tuple(range(k))
    return tuple(base for _ in range(n))


class MatchingAssignment:
    """Per-edge partial matchings between endpoint color lists.

    Pairs for edge (u, v) with u < v are stored as (color at u, color at v).
    Edges without an entry carry the empty matching.
    """

    def __init__(self, pairs_by_edge: dict[tuple[int, int], tuple] | None = None):
        self._fwd: dict[tuple[int, int], dict[int, int]] = {}
        self._bwd: dict[tuple[int, int], dict[int, int]] = {}
        for (u, v), pairs in (pairs_by_edge or {}).items():
            if u > v:
                u, v = v, u
                pairs = [(b, a) for a, b in pairs]
            fwd: dict[int, int] = {}
            bwd: dict[int, int] = {}
            for a, b in pairs:
                if a in fwd or b in bwd:
                    raise InvalidMatching(
                        f"matching on edge ({u}, {v}) reuses a color")
                fwd[a] = b
                bwd[b] = a
            self._fwd[(u, v)] = fwd
            self._bwd[(u, v)] = bwd

    @classmethod
    def empty(cls) -> "MatchingAssignment":
        return cls({})

    @classmethod
    def identity(cls, g: Graph, k: int) -> "MatchingAssignment":
        pairs = tuple((i, i) for i in range(k))
        return cls({e: pairs for e in g.edges})

    @classmethod
    def from_permutations(cls, g: Graph, k: int,
                          perms: dict[tuple[int, int], tuple[int, ...]],
                          default_identity: bool = True) -> "MatchingAssignment":
        """Full matchings: color i at u pairs with perm[i] at v for edge (u, v).

        Unlisted edges get the identity when default_identity is set, else
        the empty matching.
        """
        table = {}
        for e in g.edges:
            if e in perms:
                sigma = perms[e]
                table[e] = tuple((i, sigma[i]) for i in range(k))
            elif default_identity:
                table[e] = tuple((i, i) for i in range(k))
        return cls(table)

    def pairs(self, u: int, v: int) -> tuple[tuple[int, int], ...]:
        """Matched (color at u, color at v) pairs for edge uv."""
        if u < v:
            fwd = self._fwd.get((u, v), {})
            return tuple(sorted(fwd.items()))
        bwd = self._bwd.get((v, u), {})
        return tuple(sorted(bwd.items()))

    def partner(self, u: int, v: int, color: int) -> int | None:
        """Color of v matched with (u, color), or None."""
        if u < v:
            return self._fwd.get((u, v), {}).get(color)
        return self._bwd.get((v, u), {}).get(color)

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(e for e, fwd in self._fwd.items() if fwd))

    def validate(self, g: Graph, lists: Lists) -> None:
        """Raise InvalidMatching unless every pair references listed colors
        on actual edges (injectivity is enforced at construction)."""
        for (u, v), fwd in self._fwd.items():
            if not g.has_edge(u, v):
                if fwd:
                    raise InvalidMatching(f"matching on non-edge ({u}, {v})")
                continue
            for a, b in fwd.items():
                if a not in lists[u] or b not in lists[v]:
                    raise InvalidMatching(
                        f"pair {a}-{b} on edge ({u}, {v}) uses unlisted colors")

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatchingAssignment):
            return NotImplemented
        mine = {e: f for e, f in self._fwd.items() if f}
        theirs = {e: f for e, f in other._fwd.items() if f}
        return mine == theirs


@dataclass(frozen=True)
class CoverGraph:
    """Explicit cover graph: nodes (v, color), clique + matching edges."""

    nodes: tuple[tuple[int, int], ...]
    edges: frozenset[frozenset[tuple[int, int]]]

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def build_cover(g: Graph, lists: Lists, matching: MatchingAssignment) -> CoverGraph:
    """Materialize the cover graph of (g, lists, matching)."""
    matching.validate(g, lists)
    nodes = tuple((v, c) for v in range(g.n) for c in lists[v])
    edges = set()
    for v in range(g.n):
        cs = lists[v]
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                edges.add(frozenset({(v, cs[i]), (v, cs[j])}))
    for u, v in g.edges:
        for a, b in matching.pairs(u, v):
            edges.add(frozenset({(u, a), (v, b)}))
    return CoverGraph(nodes=nodes, edges=frozenset(edges))


def is_valid_coloring(g: Graph, lists: Lists, matching: MatchingAssignment,
                      coloring) -> bool:
    """Independent validity check: listed colors, no matched pair chosen."""
    if len(coloring) != g.n:
        return False
    for v in range(g.n):
        if coloring[v] not in lists[v]:
            return False
    for u, v in g.edges:
        if matching.partner(u, v, coloring[u]) == coloring[v]:
            return False
    return True


def find_coloring(g: Graph, lists: Lists,
                  matching: MatchingAssignment) -> tuple[int, ...] | None:
    """Exhaustive backtracking search for a DP-coloring.

    Returns a coloring tuple, or None after certifying that none exists.
    Internally colors are list positions; forward checking removes the
    matched partner from each uncolored neighbor's residual domain, and the
    next vertex is always one with the smallest residual domain (ties to
    the smallest index), with positions tried in increasing order, so the
    result is deterministic.
    """
    matching.validate(g, lists)
    n = g.n
    if n == 0:
        return ()
    ks = [len(lists[v]) for v in range(n)]
    index = [{c: i for i, c in enumerate(lists[v])} for v in range(n)]
    # partner position tables per dart
    part: dict[tuple[int, int], list[int]] = {}
    for u, v in g.edges:
        fwd = [-1] * ks[u]
        bwd = [-1] * ks[v]
        for a, b in matching.pairs(u, v):
            fwd[index[u][a]] = index[v][b]
            bwd[index[v][b]] = index[u][a]
        part[(u, v)] = fwd
        part[(v, u)] = bwd

    adj = [sorted(g.adj[v]) for v in range(n)]
    domain = [(1 << ks[v]) - 1 for v in range(n)]
    chosen = [-1] * n
    uncolored = set(range(n))

    def bitcount(x: int) -> int:
        return x.bit_count()

    def solve() -> bool:
        if not uncolored:
            return True
        v = min(uncolored, key=lambda w: (bitcount(domain[w]), w))
        if domain[v] == 0:
            return False
        uncolored.discard(v)
        d = domain[v]
        while d:
            bit = d & -d
            d ^= bit
            i = bit.bit_length() - 1
            chosen[v] = i
            removed = []
            dead = False
            for u in adj[v]:
                if chosen[u] >= 0:
                    continue
                j = part[(v, u)][i]
                if j >= 0 and (domain[u] >> j) & 1:
                    domain[u] ^= 1 << j
                    removed.append((u, j))
                    if domain[u] == 0:
                        dead = True
                        break
            if not dead and solve():
                return True
            for u, j in removed:
                domain[u] ^= 1 << j
            chosen[v] = -1
        uncolored.add(v)
        return False

    if solve():
        return tuple(lists[v][chosen[v]] for v in range(n))
    return None


def from_list_assignment(g: Graph, lists: Lists
                         ) -> tuple[Lists, MatchingAssignment]:
    """Translate an arbitrary uniform list assignment to lists [k] plus the
    matching that pairs equal original colors.

    Each vertex's list maps to [k] in sorted order, so a coloring of the
    output pulls back via sorted(lists[v])[i].
    """
    sizes = {len(L) for L in lists}
    if len(sizes) != 1:
        raise NonUniformLists(f"list sizes {sorted(sizes)} are not uniform")
    k = sizes.pop()
    ordered = [tuple(sorted(set(L))) for L in lists]
    for v, L in enumerate(ordered):
        if len(L) != k:
            raise NonUniformLists(f"list at {v} has repeated colors")
    table = {}
    for u, v in g.edges:
        pairs = []
        pos_v = {c: j for j, c in enumerate(ordered[v])}
        for i, c in enumerate(ordered[u]):
            if c in pos_v:
                pairs.append((i, pos_v[c]))
        table[(u, v)] = tuple(pairs)
    return uniform_lists(g.n, k), MatchingAssignment(table)


def gauge_normalize(g: Graph, k: int, matching: MatchingAssignment, tree_edges
                    ) -> tuple[MatchingAssignment, tuple[tuple[int, ...], ...]]:
    """Relabel colors per vertex so every tree edge carries the identity.

    Relabeling by permutations pi_v turns the matching a->b on edge (u, v)
    into pi_u(a) -> pi_v(b) and preserves colorability; the returned
    witness permutations transport colorings back and forth.  Tree edges
    must carry full (size-k) matchings.
    """
    tree = {tuple(sorted(e)) for e in tree_edges}
    if len(tree) != g.n - 1 or not tree <= set(g.edges):
        raise NotSpanningTree("edge set has wrong size or non-edges")
    # BFS from 0 assigns pi_v = pi_u o sigma_uv^-1 along tree edges
    pi: list[tuple[int, ...] | None] = [None] * g.n
    pi[0] = tuple(range(k))
    queue = [0]
    seen = 1
    tree_adj = [[] for _ in range(g.n)]
    for u, v in tree:
        tree_adj[u].append(v)
        tree_adj[v].append(u)
    while queue:
        u = queue.pop()
        for v in tree_adj[u]:
            if pi[v] is not None:
                continue
            sigma = [-1] * k  # color at u -> color at v
            for a, b in matching.pairs(u, v):
                sigma[a] = b
            if -1 in sigma:
                raise InvalidMatching(
                    f"tree edge ({u}, {v}) does not carry a full matching")
            pv = [-1] * k
            for a in range(k):
                pv[sigma[a]] = pi[u][a]
            pi[v] = tuple(pv)
            queue.append(v)
            seen += 1
    if seen != g.n:
        raise NotSpanningTree("edge set does not span the graph")
    table = {}
    for u, v in g.edges:
        pairs = tuple((pi[u][a], pi[v][b]) for a, b in matching.pairs(u, v))
        table[(u, v)] = pairs
    return MatchingAssignment(table), tuple(pi)  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# Matching-assignment file: one edge per line, "u v : a-b, c-d".  A directive
# "default identity k=K" gives unlisted edges the identity on [K]; otherwise
# unlisted edges carry the empty matching.

def parse_matching_file(text: str, g: Graph) -> tuple[MatchingAssignment, int | None]:
    """Parse the matching file format.  Returns (matching, identity k or None)."""
    table: dict[tuple[int, int], tuple] = {}
    default_k: int | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("default identity"):
            try:
                default_k = int(line.split("k=", 1)[1])
            except (IndexError, ValueError):
                raise ValueError(f"line {lineno}: bad directive {raw!r}")
            continue
        if ":" not in line:
            raise ValueError(f"line {lineno}: expected 'u v : pairs'")
        head, _, tail = line.partition(":")
        u, v = (int(t) for t in head.split())
        pairs = []
        tail = tail.strip()
        if tail:
            for chunk in tail.split(","):
                a, _, b = chunk.strip().partition("-")
                pairs.append((int(a), int(b)))
        key = (u, v) if u < v else (v, u)
        if u > v:
            pairs = [(b, a) for a, b in pairs]
        table[key] = tuple(pairs)
    if default_k is not None:
        ident = tuple((i, i) for i in range(default_k))
        for e in g.edges:
            table.setdefault(e, ident)
    return MatchingAssignment(table), default_k


def format_matching_file(matching: MatchingAssignment, g: Graph) -> str:
    lines = []
    for u, v in sorted(g.edges):
        pairs = matching.pairs(u, v)
        body = ", ".join(f"{a}-{b}" for a, b in pairs)
        lines.append(f"{u} {v} : {body}")
    return "\n".join(lines) + "\n"
