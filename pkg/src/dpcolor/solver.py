"""Chromatic parameters by exhaustive search: chi, choosability, DP-chromatic.

The DP adversary search enumerates matching assignments restricted to full
permutation matchings with the identity fixed on a spanning forest.  Both
restrictions preserve the verdict: adding pairs to a matching only adds
cover-graph edges (so a bad partial assignment extends to a bad full one),
and relabeling colors at a vertex re-indexes matchings without changing
whether an independent transversal exists.  The restricted space has
(k!)^(|E|-|V|+components) cases, enumerated in lexicographic order so the
first failing assignment is deterministic.

The choosability search enumerates list assignments up to color renaming.
Splitting a color whose support induces a disconnected subgraph into one
fresh color per component changes no verdict (matched colors never face
each other across the split), so only assignments whose color classes
induce connected subgraphs are generated: multisets of connected vertex
sets covering every vertex exactly k times.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .graphs import Graph, from_edge_list
from .dp import Lists, MatchingAssignment, find_coloring

__all__ = [
    "BudgetExceeded",
    "AdversaryCertificate",
    "DEFAULT_BUDGET",
    "chi",
    "is_k_colorable",
    "degeneracy",
    "is_dp_k_colorable",
    "chi_dp",
    "is_k_choosable",
    "chi_list",
    "normalized_assignment_count",
]

DEFAULT_BUDGET = 100_000_000


class BudgetExceeded(RuntimeError):
    """The search hit its case budget before reaching a verdict."""

    def __init__(self, attempted: int, message: str = ""):
        self.attempted = attempted
        super().__init__(message or f"budget exceeded after {attempted} cases")


@dataclass(frozen=True)
class AdversaryCertificate:
    """An assignment under which no coloring exists.

    kind is "dp" (matching assignment) or "list" (list assignment);
    replaying the certificate through find_coloring yields None.
    """

    kind: str
    k: int
    matching: MatchingAssignment | None = None
    lists: Lists | None = None


# ---------------------------------------------------------------------------
# Ordinary chromatic number.

def _max_clique(g: Graph) -> int:
    best = 0
    adj = g.adj

    def expand(cand: list[int], size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        for i, v in enumerate(cand):
            if size + len(cand) - i <= best:
                return
            expand([u for u in cand[i + 1:] if u in adj[v]], size + 1)

    expand(sorted(range(g.n), key=g.degree, reverse=True), 0)
    return best


def is_k_colorable(g: Graph, k: int) -> bool:
    """Proper k-colorability by backtracking with canonical color symmetry."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    order = sorted(range(g.n), key=g.degree, reverse=True)
    color = [-1] * g.n

    def rec(i: int, used: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        taken = {color[u] for u in g.adj[v] if color[u] >= 0}
        # a fresh color index is interchangeable with any other fresh one
        for c in range(min(used + 1, k)):
            if c not in taken:
                color[v] = c
                if rec(i + 1, max(used, c + 1)):
                    return True
                color[v] = -1
        return False

    return rec(0, 0)


def chi(g: Graph) -> int:
    """Chromatic number (exact)."""
    if g.n == 0:
        raise ValueError("chromatic number of the empty graph is undefined")
    for k in range(_max_clique(g), g.n + 1):
        if is_k_colorable(g, k):
            return k
    raise AssertionError("unreachable: n colors always suffice")


def degeneracy(g: Graph) -> int:
    """Max over the removal process of the minimum degree."""
    degs = {v: g.degree(v) for v in range(g.n)}
    alive = set(range(g.n))
    best = 0
    while alive:
        v = min(alive, key=lambda w: (degs[w], w))
        best = max(best, degs[v])
        alive.discard(v)
        for u in g.adj[v]:
            if u in alive:
                degs[u] -= 1
    return best


# ---------------------------------------------------------------------------
# DP adversary search.

def _spanning_forest(g: Graph) -> set[tuple[int, int]]:
    seen = [False] * g.n
    tree: set[tuple[int, int]] = set()
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            v = stack.pop()
            for u in sorted(g.adj[v]):
                if not seen[u]:
                    seen[u] = True
                    tree.add((u, v) if u < v else (v, u))
                    stack.append(u)
    return tree


def normalized_assignment_count(g: Graph, k: int) -> int:
    """Size of the normalized adversary space, (k!)^cyclomatic."""
    components = g.n - len(_spanning_forest(g))
    return math.factorial(k) ** (g.m - g.n + components)


class _DPSearch:
    """Reusable DP-coloring feasibility check over permutation assignments.

    Colors are 0..k-1 at every vertex.  Tree darts always carry the
    identity; set_assignment swaps in permutation tables for non-tree
    edges, then solve() runs the forward-checking backtracker.
    """

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.tree = _spanning_forest(g)
        self.nontree = sorted(g.edges - self.tree)
        self.adj = [sorted(g.adj[v]) for v in range(g.n)]
        ident = tuple(range(k))
        self.part: dict[tuple[int, int], tuple[int, ...]] = {}
        for u, v in g.edges:
            self.part[(u, v)] = ident
            self.part[(v, u)] = ident
        self.perms = list(itertools.permutations(range(k)))
        self.inv = []
        for p in self.perms:
            q = [0] * k
            for i, x in enumerate(p):
                q[x] = i
            self.inv.append(tuple(q))

    def set_assignment(self, perm_indices: tuple[int, ...]) -> None:
        for (u, v), idx in zip(self.nontree, perm_indices):
            self.part[(u, v)] = self.perms[idx]
            self.part[(v, u)] = self.inv[idx]

    def solve(self) -> bool:
        n = self.g.n
        full = (1 << self.k) - 1
        domain = [full] * n
        chosen = [-1] * n
        uncolored = set(range(n))
        adj = self.adj
        part = self.part

        def rec() -> bool:
            if not uncolored:
                return True
            v = min(uncolored, key=lambda w: (domain[w].bit_count(), w))
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
                    if (domain[u] >> j) & 1:
                        domain[u] ^= 1 << j
                        removed.append((u, j))
                        if domain[u] == 0:
                            dead = True
                            break
                if not dead and rec():
                    return True
                for u, j in removed:
                    domain[u] ^= 1 << j
                chosen[v] = -1
            uncolored.add(v)
            return False

        return rec()

    def certificate(self, perm_indices: tuple[int, ...]) -> MatchingAssignment:
        perms = {e: self.perms[i] for e, i in zip(self.nontree, perm_indices)}
        return MatchingAssignment.from_permutations(self.g, self.k, perms,
                                                    default_identity=True)


def _scan_block(search: _DPSearch, first_indices, budget: int
                ) -> tuple[str, tuple[int, ...] | None, int]:
    """Scan assignments whose first non-tree edge uses the given perm indices.

    Returns (status, perm_indices-or-None, attempted) with status in
    {"ok", "cert", "budget"}.
    """
    nperm = len(search.perms)
    rest = len(search.nontree) - 1
    attempted = 0
    if rest < 0:
        # no non-tree edges: the single all-identity assignment
        attempted = 1
        if attempted > budget:
            return "budget", None, 0
        return ("ok" if search.solve() else "cert"), (), attempted
    for first in first_indices:
        for tail in itertools.product(range(nperm), repeat=rest):
            if attempted >= budget:
                return "budget", None, attempted
            attempted += 1
            assignment = (first,) + tail
            search.set_assignment(assignment)
            if not search.solve():
                return "cert", assignment, attempted
    return "ok", None, attempted


def _dp_block_worker(payload):
    n, edges, k, first_indices, budget = payload
    g = from_edge_list(edges, n=n)
    search = _DPSearch(g, k)
    return _scan_block(search, first_indices, budget)


def is_dp_k_colorable(g: Graph, k: int, budget: int = DEFAULT_BUDGET,
                      jobs: int = 1):
    """True if every matching assignment admits a coloring, else the
    lexicographically first failing assignment as an AdversaryCertificate.

    Raises BudgetExceeded with the attempted case count if the normalized
    space cannot be settled within budget.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    search = _DPSearch(g, k)
    nperm = len(search.perms)
    if jobs <= 1 or not search.nontree or nperm == 1:
        status, assignment, attempted = _scan_block(search, range(nperm), budget)
        if status == "budget":
            raise BudgetExceeded(attempted)
        if status == "cert":
            return AdversaryCertificate(kind="dp", k=k,
                                        matching=search.certificate(assignment))
        return True
    # split the first edge's permutations into contiguous blocks; results
    # merge in block order, preserving the lexicographic-first certificate
    blocks = _contiguous_blocks(nperm, jobs)
    per_block = max(1, budget // len(blocks))
    payloads = [(g.n, tuple(g.edges), k, blk, per_block) for blk in blocks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_dp_block_worker, payloads))
    for status, assignment, attempted in results:
        if status == "budget":
            raise BudgetExceeded(sum(r[2] for r in results))
        if status == "cert":
            return AdversaryCertificate(kind="dp", k=k,
                                        matching=search.certificate(assignment))
    return True


def _contiguous_blocks(total: int, parts: int) -> list[list[int]]:
    parts = min(parts, total)
    size, extra = divmod(total, parts)
    blocks, at = [], 0
    for i in range(parts):
        width = size + (1 if i < extra else 0)
        blocks.append(list(range(at, at + width)))
        at += width
    return blocks


def chi_dp(g: Graph, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> int:
    """Least k for which the DP adversary search returns True."""
    if g.n == 0:
        raise ValueError("DP-chromatic number of the empty graph is undefined")
    for k in range(1, g.n + 2):
        if is_dp_k_colorable(g, k, budget=budget, jobs=jobs) is True:
            return k
    raise AssertionError("unreachable: max degree + 1 colors always suffice")


# ---------------------------------------------------------------------------
# Choosability.

def _list_colorable(g: Graph, lists) -> bool:
    """Proper coloring from the lists, by backtracking with fail-first order."""
    n = g.n
    avail = [set(L) for L in lists]
    color: dict[int, int] = {}

    def rec() -> bool:
        if len(color) == n:
            return True
        v = min((w for w in range(n) if w not in color),
                key=lambda w: (len(avail[w]), w))
        for c in sorted(avail[v]):
            color[v] = c
            removed = []
            dead = False
            for u in g.adj[v]:
                if u not in color and c in avail[u]:
                    avail[u].discard(c)
                    removed.append(u)
                    if not avail[u]:
                        dead = True
                        break
            if not dead and rec():
                return True
            for u in removed:
                avail[u].add(c)
            del color[v]
        return False

    return rec()


def _connected_subsets(g: Graph) -> list[int]:
    """All connected vertex subsets as bitmasks.

    Exclusive-neighborhood extension: a vertex enters the extension set only
    when first seen as a neighbor of the current subset, so each subset is
    generated exactly once (from its minimum vertex).
    """
    adjmask = [0] * g.n
    for v in range(g.n):
        for u in g.adj[v]:
            adjmask[v] |= 1 << u
    out: list[int] = []

    def rec(cur: int, ext: int, nbhd: int) -> None:
        out.append(cur)
        while ext:
            low = ext & -ext
            ext ^= low
            v = low.bit_length() - 1
            add = adjmask[v] & upper & ~nbhd
            rec(cur | low, ext | add, nbhd | adjmask[v])

    for s in range(g.n):
        upper = ~((1 << (s + 1)) - 1)
        rec(1 << s, adjmask[s] & upper, adjmask[s])
    return out


def is_k_choosable(g: Graph, k: int, max_n: int = 7,
                   budget: int = DEFAULT_BUDGET):
    """True if every k-list assignment admits a proper coloring from the
    lists, else an AdversaryCertificate carrying a failing assignment.

    Enumerates list systems up to color renaming as multisets of connected
    color classes covering every vertex exactly k times (see module
    docstring for why that is exhaustive).  Classes are tried largest
    first, so for a graph that is not even k-colorable the uniform
    assignment fails immediately.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n > max_n:
        raise ValueError(f"n={g.n} exceeds the configured bound {max_n}")
    if g.n == 0:
        return True
    classes = sorted(_connected_subsets(g), reverse=True)
    by_min: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for c in classes:
        by_min[(c & -c).bit_length() - 1].append(c)
    need = [k] * g.n
    defmask = (1 << g.n) - 1
    chosen: list[int] = []
    attempted = 0
    found: list[Lists] = []

    def leaf() -> bool:
        nonlocal attempted
        attempted += 1
        if attempted > budget:
            raise BudgetExceeded(attempted)
        lists = tuple(
            tuple(i for i, c in enumerate(chosen) if (c >> v) & 1)
            for v in range(g.n)
        )
        if not _list_colorable(g, lists):
            found.append(lists)
            return True
        return False

    def rec(group_vertex: int, bound: int) -> bool:
        nonlocal defmask
        if not defmask:
            return leaf()
        vstar = (defmask & -defmask).bit_length() - 1
        cap = bound if vstar == group_vertex else None
        for c in by_min[vstar]:
            if cap is not None and c > cap:
                continue
            if c & ~defmask:
                continue
            chosen.append(c)
            cleared = 0
            m = c
            while m:
                low = m & -m
                m ^= low
                v = low.bit_length() - 1
                need[v] -= 1
                if need[v] == 0:
                    cleared |= low
            defmask ^= cleared
            stop = rec(vstar, c)
            defmask ^= cleared
            m = c
            while m:
                low = m & -m
                m ^= low
                need[low.bit_length() - 1] += 1
            chosen.pop()
            if stop:
                return True
        return False

    if rec(-1, 0):
        return AdversaryCertificate(kind="list", k=k, lists=found[0])
    return True


def chi_list(g: Graph, max_n: int | None = None,
             budget: int = DEFAULT_BUDGET) -> int:
    """Choosability (exact).

    Greedy coloring along a removal order shows every graph is
    (degeneracy+1)-choosable, and chi is always a lower bound, so only the
    gap between the two needs the enumeration.
    """
    if g.n == 0:
        raise ValueError("choosability of the empty graph is undefined")
    low = chi(g)
    high = degeneracy(g) + 1
    bound = g.n if max_n is None else max_n
    for k in range(low, high):
        if is_k_choosable(g, k, max_n=bound, budget=budget) is True:
            return k
    return high
