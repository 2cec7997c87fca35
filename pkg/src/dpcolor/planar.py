"""Plane embeddings as rotation systems, with face tracing and incidence queries.

A rotation system gives each vertex a cyclic order of its neighbors.  Faces
are the orbits of the dart successor map: after entering v along (u, v) the
walk leaves along (v, w), where w follows u in the rotation at v.  An
embedding is accepted only if Euler's formula |V| - |E| + |F| = 2 holds,
which certifies genus 0 for connected input.

Face length counts boundary vertices with repetition; bridges and cut
vertices are allowed, so a face may repeat a vertex or be adjacent to
itself across a bridge.  All incidence statistics count such repetitions.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .graphs import Graph, from_edge_list, is_connected

__all__ = [
    "Face",
    "PlaneEmbedding",
    "Disconnected",
    "NotGenusZero",
    "NonPlanarOrTooLarge",
    "NotOnFace",
    "trace_faces",
    "face_adjacency",
    "classify_vertex",
    "brute_force_embed",
    "rotation_from_faces",
    "load_embedding",
    "dump_embedding",
]

Dart = tuple[int, int]


class Disconnected(ValueError):
    """Face tracing requires a connected graph."""


class NotGenusZero(ValueError):
    """The rotation system does not embed the graph in the plane."""


class NonPlanarOrTooLarge(ValueError):
    """Exhaustive rotation search failed or was not attempted.

    reason is "nonplanar" when every rotation was tried, else "too-large".
    """

    def __init__(self, message: str, reason: str = "too-large"):
        self.reason = reason
        super().__init__(message)


class NotOnFace(ValueError):
    """The queried vertex does not lie on the face boundary."""


@dataclass(frozen=True)
class Face:
    """One facial walk, stored as a cyclic dart sequence."""

    index: int
    walk: tuple[Dart, ...]

    @property
    def length(self) -> int:
        return len(self.walk)

    def vertices(self) -> tuple[int, ...]:
        """Boundary vertices in walk order, with repetition."""
        return tuple(u for u, _ in self.walk)

    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(d) for d in self.walk)


@dataclass(frozen=True)
class PlaneEmbedding:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[Face, ...]
    face_of_dart: dict[Dart, int] = field(compare=False, repr=False)

    def face_len(self, f: int) -> int:
        return self.faces[f].length

    def corners(self, v: int) -> tuple[int, ...]:
        """Face indices at v, one per corner (so deg(v) entries, repeats allowed)."""
        return tuple(self.face_of_dart[(u, v)] for u in self.rotation[v])

    def opposite(self, dart: Dart) -> int:
        """Index of the face on the other side of this dart's edge."""
        return self.face_of_dart[(dart[1], dart[0])]

    def adjacent_faces(self, f: int) -> tuple[int, ...]:
        """Faces across each boundary edge of f, in walk order (multiplicity kept)."""
        return tuple(self.opposite(d) for d in self.faces[f].walk)

    def vertex_on_face(self, v: int, f: int) -> bool:
        return v in self.faces[f].vertices()


def _validate_rotation(g: Graph, rot) -> tuple[tuple[int, ...], ...]:
    if len(rot) != g.n:
        raise ValueError(f"rotation has {len(rot)} entries for {g.n} vertices")
    out = []
    for v, order in enumerate(rot):
        order = tuple(order)
        if len(order) != len(set(order)) or set(order) != set(g.adj[v]):
            raise ValueError(f"rotation at {v} is not a permutation of its neighbors")
        out.append(order)
    return tuple(out)


def trace_faces(g: Graph, rot) -> PlaneEmbedding:
    """Trace facial walks of (g, rot) and verify Euler's formula.

    Raises Disconnected for disconnected input and NotGenusZero when the
    face count does not certify a plane embedding.
    """
    rotation = _validate_rotation(g, rot)
    if not is_connected(g):
        raise Disconnected("face tracing requires a connected graph")
    pos = [{u: i for i, u in enumerate(order)} for order in rotation]
    face_of: dict[Dart, int] = {}
    faces: list[Face] = []
    for start in sorted((u, v) for u in range(g.n) for v in rotation[u]):
        if start in face_of:
            continue
        walk = []
        d = start
        while d not in face_of:
            face_of[d] = len(faces)
            walk.append(d)
            u, v = d
            succ = rotation[v][(pos[v][u] + 1) % len(rotation[v])]
            d = (v, succ)
        faces.append(Face(index=len(faces), walk=tuple(walk)))
    if not faces:
        # single vertex: one face with an empty boundary walk
        faces = [Face(index=0, walk=())]
    nfaces = len(faces)
    if g.n - g.m + nfaces != 2:
        raise NotGenusZero(
            f"V-E+F = {g.n}-{g.m}+{nfaces} = {g.n - g.m + nfaces}, want 2"
        )
    return PlaneEmbedding(graph=g, rotation=rotation, faces=tuple(faces),
                          face_of_dart=face_of)


def face_adjacency(emb: PlaneEmbedding, f: int) -> list[tuple[Dart, Face]]:
    """For each boundary dart of f, the face across that edge (may be f itself)."""
    if not 0 <= f < len(emb.faces):
        raise ValueError(f"no face {f}")
    return [(d, emb.faces[emb.opposite(d)]) for d in emb.faces[f].walk]


def classify_vertex(emb: PlaneEmbedding, v: int, f: int) -> str:
    """Label v relative to f: 'poor', 'semi-rich' or 'rich'.

    Counts the distinct 3-faces that contain v and share an edge with f:
    two or more means poor, one semi-rich, zero rich.  Requires deg(v) >= 4
    and v on f's boundary.
    """
    if emb.graph.degree(v) < 4:
        raise ValueError(f"vertex {v} has degree {emb.graph.degree(v)} < 4")
    if not emb.vertex_on_face(v, f):
        raise NotOnFace(f"vertex {v} is not on face {f}")
    f_edges = emb.faces[f].edge_set()
    hits = set()
    for t in set(emb.corners(v)):
        if t == f or emb.face_len(t) != 3:
            continue
        if emb.faces[t].edge_set() & f_edges:
            hits.add(t)
    if len(hits) >= 2:
        return "poor"
    return "semi-rich" if hits else "rich"


def brute_force_embed(g: Graph, max_n: int = 9,
                      rotation_limit: int = 2_000_000) -> PlaneEmbedding:
    """Search rotation systems for one passing the Euler check.

    Intended for small graphs; raises NonPlanarOrTooLarge when the graph
    exceeds max_n, when the rotation space exceeds rotation_limit, or when
    every rotation fails (certifying non-planarity for connected input).
    """
    if g.n > max_n:
        raise NonPlanarOrTooLarge(f"n={g.n} exceeds brute-force bound {max_n}")
    if not is_connected(g):
        raise Disconnected("embedding search requires a connected graph")
    space = 1
    for v in range(g.n):
        d = g.degree(v)
        for i in range(2, d):
            space *= i
        if space > rotation_limit:
            raise NonPlanarOrTooLarge(
                f"rotation space exceeds limit {rotation_limit}")
    # fix the first neighbor at each vertex: cyclic orders, not linear ones
    anchored = []
    for v in range(g.n):
        nbrs = sorted(g.adj[v])
        anchored.append([tuple(nbrs[:1]) + rest
                         for rest in itertools.permutations(nbrs[1:])])
    for rot in itertools.product(*anchored):
        try:
            return trace_faces(g, rot)
        except NotGenusZero:
            continue
    raise NonPlanarOrTooLarge("no rotation system passes the Euler check",
                              reason="nonplanar")


def rotation_from_faces(n: int, walks) -> tuple[tuple[int, ...], ...]:
    """Reconstruct a rotation system from oriented facial walks.

    Each walk is a vertex sequence; every dart must appear in exactly one
    walk.  The corner x -> v -> y fixes y as the rotation successor of x
    at v.  Raises ValueError if the corners do not close into one cycle
    per vertex.
    """
    succ: list[dict[int, int]] = [{} for _ in range(n)]
    for walk in walks:
        L = len(walk)
        for i, v in enumerate(walk):
            x = walk[i - 1]
            y = walk[(i + 1) % L]
            if x in succ[v]:
                raise ValueError(f"dart ({x}, {v}) appears in two walks")
            succ[v][x] = y
    rotation = []
    for v in range(n):
        if not succ[v]:
            rotation.append(())
            continue
        start = min(succ[v])
        order = [start]
        while True:
            nxt = succ[v][order[-1]]
            if nxt == start:
                break
            if nxt in order or len(order) > len(succ[v]):
                raise ValueError(f"corners at {v} do not close into one cycle")
            order.append(nxt)
        if len(order) != len(succ[v]):
            raise ValueError(f"corners at {v} split into several cycles")
        rotation.append(tuple(order))
    return tuple(rotation)


# ---------------------------------------------------------------------------
# Embedding file: {"n": ..., "rotation": [[neighbors in cyclic order], ...]}

def load_embedding(source) -> PlaneEmbedding:
    """Load and validate an embedding document (dict, JSON text, or path)."""
    if isinstance(source, dict):
        doc = source
    else:
        text = source
        if "\n" not in text and not text.lstrip().startswith("{"):
            with open(text, "r", encoding="utf-8") as fh:
                text = fh.read()
        doc = json.loads(text)
    if "n" not in doc or "rotation" not in doc:
        raise ValueError("embedding document needs 'n' and 'rotation'")
    n = int(doc["n"])
    rot = [tuple(int(x) for x in order) for order in doc["rotation"]]
    if len(rot) != n:
        raise ValueError("rotation length disagrees with n")
    edges = set()
    for v, order in enumerate(rot):
        for u in order:
            if not 0 <= u < n:
                raise ValueError(f"neighbor {u} out of range at vertex {v}")
            if u == v:
                raise ValueError(f"self-loop at vertex {v}")
            edges.add((v, u) if v < u else (u, v))
    for u, v in edges:
        if u not in rot[v] or v not in rot[u]:
            raise ValueError(f"edge ({u}, {v}) is not symmetric in the rotation")
    g = from_edge_list(sorted(edges), n=n)
    return trace_faces(g, rot)


def dump_embedding(emb: PlaneEmbedding) -> str:
    doc = {"n": emb.graph.n, "rotation": [list(r) for r in emb.rotation]}
    return json.dumps(doc, indent=2)
