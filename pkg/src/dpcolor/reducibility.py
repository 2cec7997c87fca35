"""Reducible-configuration machinery: residual lists, constructive extension,
and pattern-driven certification.

A configuration is reducible for k when any DP-k-coloring of the rest of
the host extends across it, so it cannot occur in a vertex-minimal graph
that is not DP-k-colorable.  The workhorse is an ordered-subgraph extension
argument: order the configuration v1..vl so that v1 and vl are adjacent,
vl has low degree and a neighbor outside, and every interior vertex sees at
most k-1 already-colored vertices at its turn.  Then v1's color can be
picked so it never constrains vl, the interior is colored greedily, and vl
is colored last.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graphs import Graph
from .dp import Lists, MatchingAssignment, is_valid_coloring

__all__ = [
    "InvalidPartial",
    "ConditionsViolated",
    "ExtensionCheck",
    "ConfigPattern",
    "residual_lists",
    "check_extension_order",
    "extend_coloring",
    "min_degree_extend",
    "find_pattern",
    "certify_reducible",
    "pattern_from_json",
    "pattern_to_json",
]


class InvalidPartial(ValueError):
    """The partial coloring is not a valid DP-coloring of its domain."""


class ConditionsViolated(ValueError):
    """An extension precondition fails; .condition names which one."""

    def __init__(self, condition: int, message: str):
        self.condition = condition
        super().__init__(message)


def _check_partial(g: Graph, lists: Lists, matching: MatchingAssignment,
                   partial: dict[int, int]) -> None:
    for v, c in partial.items():
        if c not in lists[v]:
            raise InvalidPartial(f"color {c} not in list of vertex {v}")
    for v, c in partial.items():
        for u in g.adj[v]:
            if u in partial and matching.partner(v, u, c) == partial[u]:
                raise InvalidPartial(f"matched pair chosen on edge ({v}, {u})")


def residual_lists(g: Graph, subset, lists: Lists,
                   matching: MatchingAssignment,
                   partial: dict[int, int]) -> dict[int, set[int]]:
    """Colors still available inside the subset, given a coloring of the rest.

    A(v) is L(v) minus every color matched with the chosen color of a
    colored neighbor outside the subset.  partial must be a valid
    DP-coloring of exactly the vertices outside the subset.
    """
    subset = set(subset)
    outside = set(range(g.n)) - subset
    if set(partial) != outside:
        raise InvalidPartial("partial coloring must cover exactly the outside")
    _check_partial(g, lists, matching, partial)
    out: dict[int, set[int]] = {}
    for v in subset:
        avail = set(lists[v])
        for u in g.adj[v]:
            if u in partial:
                p = matching.partner(u, v, partial[u])
                if p is not None:
                    avail.discard(p)
        out[v] = avail
    return out


@dataclass(frozen=True)
class ExtensionCheck:
    """Outcome of the structural extension-order check."""

    ok: bool
    condition1_guaranteed: bool
    condition2_ok: bool
    condition3_ok: bool
    reasons: tuple[str, ...] = ()
    first_bad_interior: int | None = None


def check_extension_order(g: Graph, order, k: int) -> ExtensionCheck:
    """Check the extension conditions for an ordered subgraph, worst case.

    Conditions 2 (deg(vl) <= k, vl has an outside neighbor) and 3 (every
    interior vertex has at most k-1 neighbors among earlier-or-outside
    vertices) are exact.  Condition 1 (|A(v1)| > |A(vl)| >= 1, v1 adjacent
    to vl) is checked in guaranteed mode: over full matchings, a vertex
    with no outside neighbor keeps all k colors, a vertex with at least one
    loses at least one, and each outside neighbor removes at most one; so
    the condition holds for every coloring of the rest exactly when v1 has
    no outside neighbor and vl has between 1 and k-1.  Full matchings are
    the worst case for a minimal non-colorable host, since any failing
    assignment extends to a failing full one.
    """
    order = list(order)
    subset = set(order)
    if len(order) < 2 or len(subset) != len(order):
        raise ValueError("order must list at least two distinct vertices")
    v1, vl = order[0], order[-1]
    out = {v: len(g.adj[v] - subset) for v in order}
    reasons = []

    adjacent = g.has_edge(v1, vl)
    if not adjacent:
        reasons.append("endpoints are not adjacent")
    guaranteed1 = adjacent and out[v1] == 0 and 1 <= out[vl] <= k - 1
    if adjacent and not guaranteed1:
        reasons.append(
            f"residual gap not guaranteed (v1 has {out[v1]} outside "
            f"neighbors, vl has {out[vl]})")

    cond2 = g.degree(vl) <= k and out[vl] >= 1
    if not cond2:
        reasons.append(
            f"last vertex has degree {g.degree(vl)} and {out[vl]} outside "
            f"neighbors")

    cond3 = True
    first_bad = None
    earlier: set[int] = {v1}
    for i, v in enumerate(order[1:-1], start=1):
        back = len(g.adj[v] & earlier)
        if back + out[v] > k - 1:
            cond3 = False
            first_bad = i
            reasons.append(
                f"interior vertex {v} (position {i}) has {back}+{out[v]} "
                f"constraining neighbors")
            break
        earlier.add(v)

    return ExtensionCheck(
        ok=guaranteed1 and cond2 and cond3,
        condition1_guaranteed=guaranteed1,
        condition2_ok=cond2,
        condition3_ok=cond3,
        reasons=tuple(reasons),
        first_bad_interior=first_bad,
    )


def extend_coloring(g: Graph, order, lists: Lists,
                    matching: MatchingAssignment,
                    partial: dict[int, int]) -> dict[int, int]:
    """Extend a DP-coloring of the rest of g across the ordered subgraph.

    Requires the extension conditions to hold for the actual residual
    lists; raises ConditionsViolated naming the failed condition.  The
    construction: give v1 the smallest available color whose partner at vl
    is not in vl's residual list, color the interior greedily in order,
    then color vl last.  All tie-breaks take the smallest color.
    """
    order = list(order)
    subset = set(order)
    v1, vl = order[0], order[-1]
    k = len(lists[vl])
    avail = residual_lists(g, subset, lists, matching, partial)

    if not g.has_edge(v1, vl):
        raise ConditionsViolated(1, "endpoints are not adjacent")
    if not (len(avail[v1]) > len(avail[vl]) >= 1):
        raise ConditionsViolated(
            1, f"|A(v1)|={len(avail[v1])} vs |A(vl)|={len(avail[vl])}")
    out_l = len(g.adj[vl] - subset)
    if g.degree(vl) > k or out_l < 1:
        raise ConditionsViolated(
            2, f"deg(vl)={g.degree(vl)}, outside neighbors {out_l}")
    earlier = {v1}
    for i, v in enumerate(order[1:-1], start=1):
        back = len(g.adj[v] & earlier) + len(g.adj[v] - subset)
        if back > len(lists[v]) - 1:
            raise ConditionsViolated(
                3, f"interior vertex {v} has {back} constraining neighbors")
        earlier.add(v)

    coloring = dict(partial)

    # v1: a color whose matched partner misses A(vl) exists because the
    # matching is injective and |A(v1)| > |A(vl)|
    pick1 = None
    for c in sorted(avail[v1]):
        p = matching.partner(v1, vl, c)
        if p is None or p not in avail[vl]:
            pick1 = c
            break
    assert pick1 is not None, "injectivity guarantees a safe color for v1"
    coloring[v1] = pick1

    for v in order[1:-1]:
        free = set(lists[v])
        for u in g.adj[v]:
            if u in coloring:
                p = matching.partner(u, v, coloring[u])
                if p is not None:
                    free.discard(p)
        assert free, "interior vertex ran out of colors despite condition 3"
        coloring[v] = min(free)

    free = set(avail[vl])
    for u in g.adj[vl]:
        if u in subset and u in coloring:
            p = matching.partner(u, vl, coloring[u])
            if p is not None:
                free.discard(p)
    assert free, "last vertex ran out of colors despite the conditions"
    coloring[vl] = min(free)

    assert is_valid_coloring(
        g, lists, matching, tuple(coloring[v] for v in range(g.n)))
    return coloring


def min_degree_extend(g: Graph, v: int, lists: Lists,
                      matching: MatchingAssignment,
                      partial: dict[int, int]) -> dict[int, int]:
    """Extend a coloring of g - v across a vertex of degree below its list
    size; at most deg(v) colors are forbidden, so one always remains."""
    if g.degree(v) >= len(lists[v]):
        raise ValueError(
            f"degree {g.degree(v)} is not below list size {len(lists[v])}")
    avail = residual_lists(g, {v}, lists, matching, partial)[v]
    coloring = dict(partial)
    coloring[v] = min(avail)
    return coloring


# ---------------------------------------------------------------------------
# Patterns.

@dataclass(frozen=True)
class ConfigPattern:
    """A configuration: pattern graph, exact host degrees, and the coloring
    order used for certification.

    outside[i] counts the pattern vertex's neighbors outside the
    configuration, so pattern degree + outside = host degree.
    """

    name: str
    size: int
    edges: frozenset[tuple[int, int]]
    host_degree: tuple[int, ...]
    outside: tuple[int, ...]
    order: tuple[int, ...]
    adj: tuple[frozenset[int], ...] = field(compare=False, repr=False)

    @staticmethod
    def build(edges, host_degree, order, name: str = "pattern") -> "ConfigPattern":
        host_degree = tuple(host_degree)
        size = len(host_degree)
        norm = frozenset((min(u, v), max(u, v)) for u, v in edges)
        adj = [set() for _ in range(size)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        outside = tuple(host_degree[i] - len(adj[i]) for i in range(size))
        if any(x < 0 for x in outside):
            raise ValueError("host degree below pattern degree")
        order = tuple(order)
        if sorted(order) != list(range(size)):
            raise ValueError("order must enumerate the pattern vertices")
        return ConfigPattern(name=name, size=size, edges=norm,
                             host_degree=host_degree, outside=outside,
                             order=order,
                             adj=tuple(frozenset(a) for a in adj))


def pattern_from_json(source) -> ConfigPattern:
    """Load a pattern document: {"vertices": [{"hostDegree": d,
    "outsideNeighbors": o}, ...], "edges": [[i, j], ...], "order": [...]}."""
    if isinstance(source, dict):
        doc = source
    else:
        text = source
        if "\n" not in text and not text.lstrip().startswith("{"):
            with open(text, "r", encoding="utf-8") as fh:
                text = fh.read()
        doc = json.loads(text)
    degrees = [int(v["hostDegree"]) for v in doc["vertices"]]
    pat = ConfigPattern.build(
        edges=[tuple(e) for e in doc["edges"]],
        host_degree=degrees,
        order=doc.get("order", list(range(len(degrees)))),
        name=doc.get("name", "pattern"),
    )
    declared = [int(v["outsideNeighbors"]) for v in doc["vertices"]]
    if list(pat.outside) != declared:
        raise ValueError(
            f"declared outside neighbors {declared} disagree with "
            f"hostDegree minus pattern degree {list(pat.outside)}")
    return pat


def pattern_to_json(pat: ConfigPattern) -> str:
    doc = {
        "name": pat.name,
        "vertices": [
            {"hostDegree": d, "outsideNeighbors": o}
            for d, o in zip(pat.host_degree, pat.outside)
        ],
        "edges": [list(e) for e in sorted(pat.edges)],
        "order": list(pat.order),
    }
    return json.dumps(doc, indent=2)


def find_pattern(g: Graph, pat: ConfigPattern) -> list[tuple[int, ...]]:
    """All injective maps of the pattern into g that preserve pattern edges
    and give every pattern vertex its exact host degree."""
    if pat.size > g.n:
        return []
    candidates = [
        [v for v in range(g.n) if g.degree(v) == pat.host_degree[i]]
        for i in range(pat.size)
    ]
    image = [-1] * pat.size
    used = [False] * g.n
    out: list[tuple[int, ...]] = []

    def rec(i: int) -> None:
        if i == pat.size:
            out.append(tuple(image))
            return
        for v in candidates[i]:
            if used[v]:
                continue
            if any(image[j] not in g.adj[v]
                   for j in pat.adj[i] if j < i):
                continue
            image[i] = v
            used[v] = True
            rec(i + 1)
            used[v] = False
            image[i] = -1

    rec(0)
    return out


def certify_reducible(g: Graph, pat: ConfigPattern, k: int,
                      search_orders: bool = False) -> bool:
    """True when every occurrence of the pattern in g passes the extension
    check (guaranteed mode), so the pattern cannot occur in a minimal
    non-DP-k-colorable graph shaped like g.

    A single-vertex pattern certifies by the low-degree rule alone.  With
    search_orders, each occurrence may use any ordering of the pattern
    vertices instead of the designated one.
    """
    if pat.size == 1:
        return pat.host_degree[0] < k
    embeddings = find_pattern(g, pat)
    import itertools as _it
    for image in embeddings:
        if search_orders:
            if pat.size > 8:
                raise ValueError("order search is limited to 8 vertices")
            good = any(
                check_extension_order(g, [image[i] for i in perm], k).ok
                for perm in _it.permutations(range(pat.size))
            )
        else:
            good = check_extension_order(
                g, [image[i] for i in pat.order], k).ok
        if not good:
            return False
    return True
