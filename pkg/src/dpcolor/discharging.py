"""Exact-rational discharging engine for plane embeddings.

Every vertex and face of a connected plane graph starts with charge
d(x) - 4, which sums to -8 by Euler's formula.  The engine then runs one of
two deterministic phase schedules of local transfer rules (variant "a" for
graphs meant to avoid {4,7,8,9}-cycles, variants "b67"/"b68" for
{4,6,7,9}/{4,6,8,9}) and records every transfer.  Total charge is asserted
after each phase; all arithmetic is fractions.Fraction, no tolerances.

Face lengths and incidence statistics count boundary repetitions, so a face
adjacent to another across two shared edges pays or receives twice, and a
vertex appearing twice on a walk counts twice.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import cycle_spectrum, FORBIDDEN_VARIANTS
from .planar import PlaneEmbedding, classify_vertex

__all__ = [
    "ChargeSumMismatch",
    "ConservationViolated",
    "ForbiddenCyclePresent",
    "RuleVariant",
    "VARIANTS",
    "Transfer",
    "ChargeState",
    "FaceRoles",
    "FaceStats",
    "initial_charges",
    "classify_face_roles",
    "path_stats",
    "face_stats",
    "face_charge_capacity",
    "face_charge_demand",
    "apply_rules",
    "audit",
    "AuditReport",
    "format_transfer_log",
]

THIRD = Fraction(1, 3)
FIFTH = Fraction(1, 5)
SIXTH = Fraction(1, 6)
TWELFTH = Fraction(1, 12)
ONE = Fraction(1)
TOTAL = Fraction(-8)


class ChargeSumMismatch(ValueError):
    """Initial charges do not sum to -8; the embedding data is broken."""


class ConservationViolated(RuntimeError):
    """Internal invariant: a phase changed the total charge."""


class ForbiddenCyclePresent(ValueError):
    """Strict mode: the graph has a cycle the variant forbids."""


@dataclass(frozen=True)
class RuleVariant:
    name: str
    forbidden: frozenset[int]
    style: str  # "a" or "b"


VARIANTS: dict[str, RuleVariant] = {
    "a": RuleVariant("a", FORBIDDEN_VARIANTS["a"], "a"),
    "b67": RuleVariant("b67", FORBIDDEN_VARIANTS["b67"], "b"),
    "b68": RuleVariant("b68", FORBIDDEN_VARIANTS["b68"], "b"),
}


@dataclass(frozen=True)
class Transfer:
    phase: str
    rule: str
    source: str
    sink: str
    amount: Fraction


class ChargeState:
    """Charges per vertex and face plus the full transfer log."""

    def __init__(self, vertex_charge, face_charge):
        self.vertex_charge: list[Fraction] = list(vertex_charge)
        self.face_charge: list[Fraction] = list(face_charge)
        self.log: list[Transfer] = []
        self.phase_totals: list[tuple[str, Fraction]] = []
        self.notes: list[str] = []

    def total(self) -> Fraction:
        return sum(self.vertex_charge) + sum(self.face_charge)

    def charge(self, kind: str, idx: int) -> Fraction:
        return (self.vertex_charge if kind == "v" else self.face_charge)[idx]

    def _bump(self, kind: str, idx: int, amount: Fraction) -> None:
        if kind == "v":
            self.vertex_charge[idx] += amount
        else:
            self.face_charge[idx] += amount

    def move(self, phase: str, rule: str, src: tuple[str, int],
             snk: tuple[str, int], amount: Fraction) -> None:
        assert amount >= 0, "rules never move negative charge"
        if amount == 0:
            return
        self._bump(src[0], src[1], -amount)
        self._bump(snk[0], snk[1], amount)
        self.log.append(Transfer(phase, rule, f"{src[0]}{src[1]}",
                                 f"{snk[0]}{snk[1]}", amount))

    def end_phase(self, phase: str) -> None:
        t = self.total()
        self.phase_totals.append((phase, t))
        if t != TOTAL:
            raise ConservationViolated(f"after {phase}: total {t} != -8")

    def received(self, kind: str, idx: int) -> Fraction:
        name = f"{kind}{idx}"
        return sum((t.amount for t in self.log if t.sink == name), Fraction(0))

    def sent(self, kind: str, idx: int) -> Fraction:
        name = f"{kind}{idx}"
        return sum((t.amount for t in self.log if t.source == name), Fraction(0))


def initial_charges(emb: PlaneEmbedding) -> ChargeState:
    """Charge d(x) - 4 on every vertex and face; asserts the -8 total."""
    g = emb.graph
    state = ChargeState(
        [Fraction(g.degree(v) - 4) for v in range(g.n)],
        [Fraction(f.length - 4) for f in emb.faces],
    )
    if state.total() != TOTAL:
        raise ChargeSumMismatch(f"initial total {state.total()} != -8")
    return state


# ---------------------------------------------------------------------------
# Classifications.

@dataclass(frozen=True)
class FaceRoles:
    """Vertex and face classifications the rules consume.

    labels maps (vertex, big-face) pairs to poor/semi-rich/rich; special is
    the set of vertices that are semi-rich to one big face and rich to
    another; good_pairs are (donor, receiver) faces for the 1/6 gift.
    """

    triangular: frozenset[int]
    on_three_face: frozenset[int]
    labels: dict[tuple[int, int], str]
    special: frozenset[int]
    bad_five: frozenset[int]
    good_pairs: tuple[tuple[int, int], ...]
    reviews: tuple[str, ...]


def _face_degree_pattern(emb: PlaneEmbedding, f: int) -> tuple[int, ...]:
    return tuple(sorted(emb.graph.degree(u) for u in emb.faces[f].vertices()))


def _is_small_witness_face(emb: PlaneEmbedding, f: int) -> bool:
    """A (3,3,4+)-triangle or a (3,3,3,3,4+)-pentagon."""
    degs = _face_degree_pattern(emb, f)
    if len(degs) == 3:
        return degs[0] == 3 and degs[1] == 3 and degs[2] >= 4
    if len(degs) == 5:
        return degs[:4] == (3, 3, 3, 3) and degs[4] >= 4
    return False


def _good_pairs(emb: PlaneEmbedding) -> tuple[list[tuple[int, int]], list[str]]:
    """Detect (donor, receiver) pairs for the big-face 1/6 gift.

    The receiver must be a 10-face on ten distinct 3-vertices sharing a
    (3,3)-edge with the donor (a 10+-face), and walking along the donor
    away from either end of the shared edge must hit a 4+-vertex next, then
    a 3+-vertex, where the 4+-vertex lies on a (3,3,4+)- or
    (3,3,3,3,4+)-face adjacent to both.  Only this stated prefix is
    checked; every detection is listed for review.
    """
    g = emb.graph
    receivers = set()
    for f in range(len(emb.faces)):
        verts = emb.faces[f].vertices()
        if (emb.face_len(f) == 10 and len(set(verts)) == 10
                and all(g.degree(u) == 3 for u in verts)):
            receivers.add(f)
    pairs: set[tuple[int, int]] = set()
    reviews: list[str] = []

    def end_ok(donor: int, pos: int, step: int, receiver: int) -> bool:
        walk = emb.faces[donor].walk
        L = len(walk)
        second = walk[(pos + step) % L][0]
        third = walk[(pos + 2 * step) % L][0]
        if g.degree(second) < 4 or g.degree(third) < 3:
            return False
        donor_edges = emb.faces[donor].edge_set()
        receiver_edges = emb.faces[receiver].edge_set()
        for w in set(emb.corners(second)):
            if not _is_small_witness_face(emb, w):
                continue
            we = emb.faces[w].edge_set()
            if (we & donor_edges) and (we & receiver_edges):
                return True
        return False

    for donor in range(len(emb.faces)):
        if emb.face_len(donor) < 10:
            continue
        walk = emb.faces[donor].walk
        L = len(walk)
        for i, dart in enumerate(walk):
            receiver = emb.opposite(dart)
            if receiver not in receivers or receiver == donor:
                continue
            w1, w2 = dart
            if g.degree(w1) != 3 or g.degree(w2) != 3:
                continue
            # walk[i] leaves w1 toward w2; away from the edge means the
            # previous walk vertex on the w1 side, the +2 vertex on the w2 side
            if end_ok(donor, i, -1, receiver) and end_ok(donor, (i + 1) % L, +1, receiver):
                if (donor, receiver) not in pairs:
                    pairs.add((donor, receiver))
                    reviews.append(
                        f"face f{donor} good to f{receiver} across edge "
                        f"({w1}, {w2}); path prefix checked only")
    return sorted(pairs), reviews


def classify_face_roles(emb: PlaneEmbedding) -> FaceRoles:
    g = emb.graph
    on_three = frozenset(
        v for v in range(g.n)
        if any(emb.face_len(f) == 3 for f in emb.corners(v))
    )
    triangular = frozenset(v for v in on_three if g.degree(v) == 3)
    labels: dict[tuple[int, int], str] = {}
    for v in range(g.n):
        if g.degree(v) < 4:
            continue
        for f in set(emb.corners(v)):
            if emb.face_len(f) >= 10:
                labels[(v, f)] = classify_vertex(emb, v, f)
    semi_somewhere = {v for (v, _), lab in labels.items() if lab == "semi-rich"}
    rich_somewhere = {v for (v, _), lab in labels.items() if lab == "rich"}
    special = frozenset(semi_somewhere & rich_somewhere)
    bad_five = frozenset(
        f for f in range(len(emb.faces))
        if emb.face_len(f) == 5
        and sum(1 for u in emb.faces[f].vertices() if g.degree(u) == 3) == 5
        and sum(1 for af in emb.adjacent_faces(f) if emb.face_len(af) == 5) == 2
    )
    pairs, reviews = _good_pairs(emb)
    return FaceRoles(
        triangular=triangular,
        on_three_face=on_three,
        labels=labels,
        special=special,
        bad_five=bad_five,
        good_pairs=tuple(pairs),
        reviews=tuple(reviews),
    )


# ---------------------------------------------------------------------------
# Path statistics along big faces.

def path_stats(emb: PlaneEmbedding, f: int) -> dict[int, int]:
    """t_i counts for a 10+-face: maximal boundary paths whose every edge
    borders a 5--face.  t_1 counts boundary slots on no such path; a fully
    covered boundary is one path with d(f) vertices.  Always satisfies
    sum(i * t_i) = d(f)."""
    d = emb.face_len(f)
    if d < 10:
        raise ValueError(f"face {f} has length {d} < 10")
    covered = [emb.face_len(emb.opposite(dart)) <= 5
               for dart in emb.faces[f].walk]
    t: dict[int, int] = defaultdict(int)
    if all(covered):
        t[d] = 1
        return dict(t)
    start = covered.index(False)
    seq = covered[start:] + covered[:start]
    run = 0
    for c in seq:
        if c:
            run += 1
        elif run:
            t[run + 1] += 1
            run = 0
    if run:
        t[run + 1] += 1
    slots_on_paths = sum(i * cnt for i, cnt in t.items())
    if d > slots_on_paths:
        t[1] = d - slots_on_paths
    assert sum(i * cnt for i, cnt in t.items()) == d
    return dict(t)


@dataclass(frozen=True)
class FaceStats:
    """Per-face statistics: incident 3-vertices, adjacent 5-faces, adjacent
    bad 5-faces, semi-rich-or-big vertices, path counts, and the length
    class x (0 for 12+, 1 for 11, 2 for 10)."""

    s3: int
    r5: int
    b5: int
    s: int
    t: dict[int, int]
    x: int


def face_stats(emb: PlaneEmbedding, roles: FaceRoles, f: int) -> FaceStats:
    g = emb.graph
    verts = emb.faces[f].vertices()
    d = emb.face_len(f)
    s3 = sum(1 for u in verts if g.degree(u) == 3)
    adjacent = emb.adjacent_faces(f)
    r5 = sum(1 for af in adjacent if emb.face_len(af) == 5)
    b5 = sum(1 for af in adjacent if af in roles.bad_five)
    s = sum(
        1 for u in verts
        if g.degree(u) >= 5
        or (g.degree(u) == 4 and roles.labels.get((u, f)) == "semi-rich")
    )
    if d >= 12:
        x = 0
    elif d == 11:
        x = 1
    elif d == 10:
        x = 2
    else:
        x = 0
    t = path_stats(emb, f) if d >= 10 else {}
    return FaceStats(s3=s3, r5=r5, b5=b5, s=s, t=t, x=x)


def _tsum(t: dict[int, int], lo: int, weight) -> Fraction:
    return sum((Fraction(weight(i)) * cnt for i, cnt in t.items() if i >= lo),
               Fraction(0))


def face_charge_capacity(t: dict[int, int], d_f: int) -> Fraction:
    """Lower bound on what a 10+-face can give out, as the long-form sum;
    asserts the closed form (2/3)d - x/3 before returning it."""
    if d_f < 10:
        raise ValueError("capacity is defined for 10+-faces")
    if sum(i * cnt for i, cnt in t.items()) != d_f:
        raise ValueError("path counts do not tile the boundary")
    x = 0 if d_f >= 12 else (1 if d_f == 11 else 2)
    value = (
        THIRD * _tsum(t, 1, lambda i: i)
        + Fraction(2, 3) * _tsum(t, 2, lambda i: 1)
        + THIRD * Fraction(t.get(1, 0))
        + THIRD * _tsum(t, 3, lambda i: i - 2)
        - Fraction(x, 3)
    )
    assert value == Fraction(2, 3) * d_f - Fraction(x, 3)
    return value


def face_charge_demand(t: dict[int, int]) -> Fraction:
    """Upper bound on what a 10+-face must send out, from its path counts."""
    return (
        THIRD * _tsum(t, 1, lambda i: i)
        + Fraction(2, 3) * _tsum(t, 2, lambda i: 1)
        + SIXTH * _tsum(t, 6, lambda i: i - 5)
        + SIXTH * _tsum(t, 3, lambda i: 1)
    )


# ---------------------------------------------------------------------------
# The rule engine.

def _resolve_variant(variant) -> RuleVariant:
    if isinstance(variant, RuleVariant):
        return variant
    try:
        return VARIANTS[variant]
    except KeyError:
        raise ValueError(f"unknown variant {variant!r}; pick from {sorted(VARIANTS)}")


def _phase_r1(emb: PlaneEmbedding, state: ChargeState) -> None:
    g = emb.graph
    for f in range(len(emb.faces)):
        if emb.face_len(f) != 3:
            continue
        for dart in emb.faces[f].walk:
            other = emb.opposite(dart)
            if emb.face_len(other) >= 5:
                state.move("P1", "R1", ("f", other), ("f", f), THIRD)
    for f in range(len(emb.faces)):
        if emb.face_len(f) < 5:
            continue
        for u in emb.faces[f].vertices():
            if g.degree(u) >= 5:
                state.move("P1", "R1", ("v", u), ("f", f), FIFTH)
    state.end_phase("P1")


def _phase_r2(emb: PlaneEmbedding, state: ChargeState, roles: FaceRoles) -> None:
    g = emb.graph
    for f in range(len(emb.faces)):
        if emb.face_len(f) < 10:
            continue
        for u in emb.faces[f].vertices():
            if g.degree(u) < 4:
                continue
            lab = roles.labels.get((u, f))
            if lab == "semi-rich" and u in roles.special:
                state.move("P2", "R2", ("v", u), ("f", f), SIXTH)
            if lab == "rich" and g.degree(u) == 4 and u in roles.on_three_face:
                state.move("P2", "R2", ("f", f), ("v", u), THIRD)
    state.end_phase("P2")


def _third_face_at(emb: PlaneEmbedding, v: int, skip1: int, skip2: int) -> int | None:
    """The remaining corner face at a 3-vertex after removing one occurrence
    each of two known faces; None in degenerate walks."""
    corners = list(emb.corners(v))
    for skip in (skip1, skip2):
        if skip in corners:
            corners.remove(skip)
        else:
            return None
    if len(corners) != 1:
        return None
    return corners[0]


def _variant_a_phases(emb: PlaneEmbedding, state: ChargeState,
                      roles: FaceRoles) -> None:
    g = emb.graph
    fives = [f for f in range(len(emb.faces)) if emb.face_len(f) == 5]

    # P3: gifts from big faces to 5-faces that touch a 3-face
    for f in fives:
        walk = emb.faces[f].walk
        shares_33 = any(
            emb.face_len(emb.opposite(d)) == 3
            and g.degree(d[0]) == 3 and g.degree(d[1]) == 3
            for d in walk
        )
        if shares_33:
            for d in walk:
                other = emb.opposite(d)
                if emb.face_len(other) >= 10:
                    state.move("P3", "R4a", ("f", other), ("f", f), THIRD)
        for d in walk:
            tface = emb.opposite(d)
            if emb.face_len(tface) != 3:
                continue
            x, y = d
            if g.degree(x) == 3 and g.degree(y) >= 4:
                three = x
            elif g.degree(y) == 3 and g.degree(x) >= 4:
                three = y
            else:
                continue
            donor = _third_face_at(emb, three, f, tface)
            if donor is None:
                state.notes.append(
                    f"R4a: no third face at 3-vertex {three} of face f{f}")
            elif emb.face_len(donor) >= 10:
                state.move("P3", "R4a", ("f", donor), ("f", f), THIRD)
                state.notes.append(
                    f"R4a: f{donor} chosen as the big face at 3-vertex "
                    f"{three} for the (3,4+)-edge of f{f}")
    state.end_phase("P3")

    # P4: each 5-face pays 1 to each incident triangular 3-vertex
    for f in fives:
        for u in emb.faces[f].vertices():
            if u in roles.triangular:
                state.move("P4", "R4a", ("f", f), ("v", u), ONE)
    state.end_phase("P4")

    # P5: each 5-face spreads its remaining positive charge over adjacent 10-faces
    for f in fives:
        c = state.face_charge[f]
        if c <= 0:
            continue
        targets = [emb.opposite(d) for d in emb.faces[f].walk
                   if emb.face_len(emb.opposite(d)) == 10]
        if not targets:
            state.notes.append(f"R4a: f{f} has surplus {c} but no adjacent 10-face")
            continue
        share = c / len(targets)
        for tgt in targets:
            state.move("P5", "R4a", ("f", f), ("f", tgt), share)
    state.end_phase("P5")

    # P6: each 3-vertex pulls what it still needs from incident 6+-faces
    for v in range(g.n):
        if g.degree(v) != 3:
            continue
        needed = -state.vertex_charge[v]
        if needed <= 0:
            continue
        donors = [f for f in emb.corners(v) if emb.face_len(f) >= 6]
        if not donors:
            state.notes.append(f"R4a: 3-vertex {v} needs {needed} but has no 6+-face")
            continue
        share = needed / len(donors)
        for f in donors:
            state.move("P6", "R4a", ("f", f), ("v", v), share)
    state.end_phase("P6")


def _variant_b_phases(emb: PlaneEmbedding, state: ChargeState,
                      roles: FaceRoles) -> None:
    g = emb.graph
    fives = [f for f in range(len(emb.faces)) if emb.face_len(f) == 5]

    # P3: each 3-vertex pulls 1 evenly from its incident 5+-faces
    for v in range(g.n):
        if g.degree(v) != 3:
            continue
        donors = [f for f in emb.corners(v) if emb.face_len(f) >= 5]
        if not donors:
            state.notes.append(f"R4b: 3-vertex {v} has no incident 5+-face")
            continue
        share = ONE / len(donors)
        for f in donors:
            state.move("P3", "R4b", ("f", f), ("v", v), share)
    state.end_phase("P3")

    # P4: each 5-face gets 1/6 from each adjacent 7+-face
    for f in fives:
        for d in emb.faces[f].walk:
            other = emb.opposite(d)
            if emb.face_len(other) >= 7:
                state.move("P4", "R4b", ("f", other), ("f", f), SIXTH)
    state.end_phase("P4")

    # P5: each bad 5-face gets 1/12 from each adjacent 5-face
    for f in sorted(roles.bad_five):
        for d in emb.faces[f].walk:
            other = emb.opposite(d)
            if emb.face_len(other) == 5:
                state.move("P5", "R4b", ("f", other), ("f", f), TWELFTH)
    state.end_phase("P5")

    # P6: one synchronous surplus pass among 5-faces, no cascading
    snapshot = {f: state.face_charge[f] for f in fives}
    for f in fives:
        c = snapshot[f]
        if c <= 0:
            continue
        targets = [emb.opposite(d) for d in emb.faces[f].walk
                   if emb.face_len(emb.opposite(d)) == 5]
        if not targets:
            state.notes.append(f"R4b: f{f} has surplus {c} but no adjacent 5-face")
            continue
        share = c / len(targets)
        for tgt in targets:
            state.move("P6", "R4b", ("f", f), ("f", tgt), share)
    state.end_phase("P6")


def _phase_r3(state: ChargeState, roles: FaceRoles) -> None:
    for donor, receiver in roles.good_pairs:
        state.move("P7", "R3", ("f", donor), ("f", receiver), SIXTH)
    state.end_phase("P7")


def apply_rules(emb: PlaneEmbedding, variant, strict: bool = False,
                roles: FaceRoles | None = None) -> ChargeState:
    """Run the full phase schedule for the variant and return the final
    charge state with its transfer log.

    Strict mode refuses to run when the graph contains a forbidden cycle;
    otherwise the run proceeds and the violation is noted in the state.
    """
    var = _resolve_variant(variant)
    present = cycle_spectrum(emb.graph, max_len=9).present & var.forbidden
    if present:
        if strict:
            raise ForbiddenCyclePresent(
                f"variant {var.name} forbids cycle lengths {sorted(present)}")
    if roles is None:
        roles = classify_face_roles(emb)
    state = initial_charges(emb)
    if present:
        state.notes.append(
            f"hypothesis violated: {sorted(present)}-cycles present under "
            f"variant {var.name}")
    _phase_r1(emb, state)
    _phase_r2(emb, state, roles)
    if var.style == "a":
        _variant_a_phases(emb, state, roles)
    else:
        _variant_b_phases(emb, state, roles)
    _phase_r3(state, roles)
    return state


def format_transfer_log(state: ChargeState) -> str:
    """Tab-separated log: phase, rule, source, sink, amount as p/q."""
    lines = ["phase\trule\tsource\tsink\tamount"]
    for t in state.log:
        lines.append(f"{t.phase}\t{t.rule}\t{t.source}\t{t.sink}\t{t.amount}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# The audit.

@dataclass(frozen=True)
class AuditReport:
    variant: str
    hypothesis_ok: bool
    forbidden_cycles_found: tuple[int, ...]
    min_degree: int
    low_degree_vertices: tuple[int, ...]
    pattern_hits: dict[str, int]
    negative_vertices: tuple[tuple[int, Fraction], ...]
    negative_faces: tuple[tuple[int, Fraction], ...]
    total: Fraction
    notes: tuple[str, ...]
    reviews: tuple[str, ...]
    state: ChargeState = field(compare=False, repr=False)

    def findings(self) -> list[str]:
        out = []
        if not self.hypothesis_ok:
            out.append(
                f"forbidden cycle present: lengths {list(self.forbidden_cycles_found)}")
        if self.low_degree_vertices:
            out.append(f"vertices of degree < 3: {list(self.low_degree_vertices)}")
        for name, hits in self.pattern_hits.items():
            if hits:
                out.append(f"reducible pattern '{name}' occurs {hits} times")
        for v, c in self.negative_vertices:
            out.append(f"vertex {v} ends with charge {c}")
        for f, c in self.negative_faces:
            out.append(f"face {f} ends with charge {c}")
        return out

    def format(self) -> str:
        lines = [
            f"variant: {self.variant}",
            f"hypothesis satisfied: {'yes' if self.hypothesis_ok else 'no'}",
            f"minimum degree: {self.min_degree}",
            f"final total charge: {self.total}",
        ]
        findings = self.findings()
        if findings:
            lines.append("findings:")
            lines.extend(f"  - {x}" for x in findings)
        else:
            lines.append("findings: none")
        for note in self.notes:
            lines.append(f"note: {note}")
        for rev in self.reviews:
            lines.append(f"review: {rev}")
        return "\n".join(lines)


def audit(emb: PlaneEmbedding, variant, patterns=(), strict: bool = False,
          k: int = 3) -> AuditReport:
    """Run every check and the rule engine; list all escape hatches.

    For a graph that satisfies the variant hypothesis, has minimum degree
    at least 3, and contains none of the supplied reducible patterns, a
    correct discharging argument forces some vertex or face to end
    negative, so an empty findings list on such input would certify a
    counterexample candidate.
    """
    from .reducibility import find_pattern

    var = _resolve_variant(variant)
    g = emb.graph
    present = tuple(sorted(cycle_spectrum(g, max_len=9).present & var.forbidden))
    degrees = g.degrees() if g.n else (0,)
    low = tuple(v for v in range(g.n) if g.degree(v) < 3)
    hits = {pat.name: len(find_pattern(g, pat)) for pat in patterns}
    roles = classify_face_roles(emb)
    state = apply_rules(emb, var, strict=strict, roles=roles)
    neg_v = tuple((v, state.vertex_charge[v]) for v in range(g.n)
                  if state.vertex_charge[v] < 0)
    neg_f = tuple((f, state.face_charge[f]) for f in range(len(emb.faces))
                  if state.face_charge[f] < 0)
    return AuditReport(
        variant=var.name,
        hypothesis_ok=not present,
        forbidden_cycles_found=present,
        min_degree=min(degrees),
        low_degree_vertices=low,
        pattern_hits=hits,
        negative_vertices=neg_v,
        negative_faces=neg_f,
        total=state.total(),
        notes=tuple(state.notes),
        reviews=roles.reviews,
        state=state,
    )
