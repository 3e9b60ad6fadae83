"""Immutable finite simplicial complexes of dimension at most 3.

The complex stores its simplices explicitly per dimension (vertices, edges,
triangles, tetrahedra) together with the adjacency relation of the
1-skeleton.  All queries used by the curvature checkers live here: spans
(induced subcomplexes), links, chord tests for cycles, flagness, and
chordless-cycle enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import (
    BoundExceeded,
    DimensionTooHigh,
    DuplicateVertexInSimplex,
    SimplexNotPresent,
)
from .verdicts import Verdict, failed, passed

MAX_DIM = 3

# Enumeration guard: chordless-cycle searches refuse lengths above this
# unless the caller raises the cap explicitly.
DEFAULT_CYCLE_CAP = 8


@dataclass(frozen=True)
class Cycle:
    """A cyclic vertex sequence of length >= 4, stored in canonical form
    (lexicographically minimal rotation/reflection)."""

    vertices: tuple
    is_full: bool = False

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        k = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % k]) for i in range(k)]

    def to_json(self):
        return {"kind": "cycle", "vertices": list(self.vertices), "full": self.is_full}


def canonical_cycle(vertices: Sequence[int]) -> tuple:
    """Lexicographically minimal representative among all rotations and the
    two orientations of a cyclic sequence."""
    vs = tuple(vertices)
    k = len(vs)
    best = None
    for seq in (vs, vs[::-1]):
        for r in range(k):
            cand = seq[r:] + seq[:r]
            if best is None or cand < best:
                best = cand
    return best


class SimplicialComplex:
    """A finite simplicial complex, immutable after construction.

    ``vertex_count`` is one more than the largest vertex id mentioned at
    build time; ids without a 0-simplex are simply absent from the complex.
    ``simplices(d)`` returns the stored d-simplices as sorted tuples.
    """

    __slots__ = ("vertex_count", "name", "_faces", "_adj", "_dist_cache")

    def __init__(self, vertex_count: int, faces: dict, name: Optional[str] = None):
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "_faces", {d: frozenset(faces.get(d, ())) for d in range(MAX_DIM + 1)})
        adj = [set() for _ in range(vertex_count)]
        for (u, v) in self._faces[1]:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))
        object.__setattr__(self, "_dist_cache", {})

    def __setattr__(self, *args):
        raise AttributeError("SimplicialComplex is immutable")

    def __reduce__(self):
        return (SimplicialComplex,
                (self.vertex_count, {d: self._faces[d] for d in range(MAX_DIM + 1)}, self.name))

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return tuple(v for (v,) in sorted(self._faces[0]))

    def simplices(self, dim: int) -> frozenset:
        if not 0 <= dim <= MAX_DIM:
            return frozenset()
        return self._faces[dim]

    def all_simplices(self):
        for d in range(MAX_DIM + 1):
            yield from sorted(self._faces[d])

    def has_simplex(self, vertices: Iterable[int]) -> bool:
        vs = tuple(sorted(vertices))
        d = len(vs) - 1
        if not 0 <= d <= MAX_DIM:
            return False
        return vs in self._faces[d]

    def has_vertex(self, v: int) -> bool:
        return 0 <= v < self.vertex_count and (v,) in self._faces[0]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def dimension(self) -> int:
        for d in range(MAX_DIM, -1, -1):
            if self._faces[d]:
                return d
        return -1

    def counts(self) -> tuple:
        return tuple(len(self._faces[d]) for d in range(MAX_DIM + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(self._faces[d]) for d in range(MAX_DIM + 1))

    def maximal_simplices(self) -> list:
        """Simplices not properly contained in any stored simplex."""
        out = []
        for d in range(MAX_DIM + 1):
            higher = self._faces[d + 1] if d < MAX_DIM else frozenset()
            for s in self._faces[d]:
                sset = set(s)
                if not any(sset < set(t) for t in higher):
                    out.append(s)
        return sorted(out, key=lambda s: (s, len(s)))

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self._faces == other._faces

    def __hash__(self):
        return hash((self.vertex_count, tuple(self._faces[d] for d in range(MAX_DIM + 1))))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<SimplicialComplex{label} v={len(self._faces[0])} counts={self.counts()}>"

    # -- derived complexes -------------------------------------------------

    def span(self, vertex_set: Iterable[int]) -> "SimplicialComplex":
        """Full subcomplex induced by a vertex set, on the same vertex ids."""
        keep = set(vertex_set)
        faces = {
            d: [s for s in self._faces[d] if keep.issuperset(s)]
            for d in range(MAX_DIM + 1)
        }
        return SimplicialComplex(self.vertex_count, faces, name=self.name)

    def link(self, simplex: Iterable[int]):
        """Link of a stored simplex, relabeled to contiguous ids.

        Returns ``(link_complex, vertex_map)`` where ``vertex_map[i]`` is the
        id in this complex of link vertex ``i``.
        """
        sigma = tuple(sorted(simplex))
        if not self.has_simplex(sigma):
            raise SimplexNotPresent(f"simplex {sigma} not in complex")
        sset = set(sigma)
        members = []
        for d in range(MAX_DIM + 1 - len(sigma)):
            for tau in self._faces[d]:
                if sset.isdisjoint(tau) and self.has_simplex(tau + sigma):
                    members.append(tau)
        vertex_map = sorted({v for tau in members for v in tau})
        back = {v: i for i, v in enumerate(vertex_map)}
        faces = {d: [] for d in range(MAX_DIM + 1)}
        for tau in members:
            faces[len(tau) - 1].append(tuple(back[v] for v in tau))
        return SimplicialComplex(len(vertex_map), faces), vertex_map


def _close_downward(simplex: tuple, faces: dict):
    k = len(simplex)
    for size in range(1, k + 1):
        for sub in combinations(simplex, size):
            faces[size - 1].add(sub)


def build_complex(maximal_simplices: Iterable[Iterable[int]], name: Optional[str] = None) -> SimplicialComplex:
    """Build a complex from maximal simplices, computing the downward closure.

    Vertex ids must be non-negative; each input list may have 1..4 distinct
    vertices.  ``vertex_count`` becomes ``max id + 1``.
    """
    faces = {d: set() for d in range(MAX_DIM + 1)}
    top = -1
    for raw in maximal_simplices:
        vs = tuple(sorted(raw))
        if len(vs) > MAX_DIM + 1:
            raise DimensionTooHigh(f"simplex {vs} has {len(vs)} vertices (max {MAX_DIM + 1})")
        if len(set(vs)) != len(vs):
            raise DuplicateVertexInSimplex(f"simplex {tuple(raw)} repeats a vertex")
        if not vs:
            continue
        if vs[0] < 0:
            raise ValueError(f"negative vertex id in {vs}")
        top = max(top, vs[-1])
        _close_downward(vs, faces)
    return SimplicialComplex(top + 1, faces, name=name)


# -- fullness and flagness -------------------------------------------------


def chords(X: SimplicialComplex, cycle: Sequence[int]) -> list:
    """Edges of X between non-consecutive vertices of a cyclic sequence."""
    vs = tuple(cycle)
    k = len(vs)
    found = []
    for i in range(k):
        for j in range(i + 1, k):
            if j - i == 1 or (i == 0 and j == k - 1):
                continue
            if X.adjacent(vs[i], vs[j]):
                found.append(tuple(sorted((vs[i], vs[j]))))
    return sorted(set(found))


def is_cycle(X: SimplicialComplex, vertices: Sequence[int]) -> bool:
    vs = tuple(vertices)
    k = len(vs)
    if k < 3 or len(set(vs)) != k:
        return False
    return all(X.adjacent(vs[i], vs[(i + 1) % k]) for i in range(k))


def is_full(X: SimplicialComplex, cycle: Sequence[int]) -> Verdict:
    """Chordlessness of a cyclic vertex sequence.

    The input is read in cyclic order; consecutive vertices must be adjacent.
    A failing verdict carries a chord as witness.
    """
    vs = tuple(cycle)
    if not is_cycle(X, vs):
        return failed("is_full", {"kind": "not_a_cycle", "vertices": list(vs)},
                      detail="input is not a cycle of the complex")
    ch = chords(X, vs)
    if ch:
        return failed("is_full", {"kind": "chord", "edge": list(ch[0]), "cycle": list(vs)},
                      detail=f"chord {ch[0]} inside cycle", chords=len(ch))
    return passed("is_full", detail=f"cycle of length {len(vs)} has no chords")


def full_cycle(X: SimplicialComplex, vertices: Sequence[int]) -> Cycle:
    """Construct a Cycle value, flagging chordlessness against ``X``."""
    return Cycle(canonical_cycle(vertices), is_full=not chords(X, vertices) and is_cycle(X, vertices))


def flag_witness(X: SimplicialComplex):
    """Smallest pairwise-adjacent vertex set spanning no stored simplex.

    Returns None when the complex is flag.  Search is output-sensitive:
    empty triangles first, then empty 3-simplices over stored triangles,
    then 5-cliques (which can never span, the dimension being capped at 3).
    """
    for (u, v) in sorted(X.simplices(1)):
        for w in sorted(X.neighbors(u) & X.neighbors(v)):
            if w > v and not X.has_simplex((u, v, w)):
                return (u, v, w)
    for tri in sorted(X.simplices(2)):
        common = X.neighbors(tri[0]) & X.neighbors(tri[1]) & X.neighbors(tri[2])
        for x in sorted(common):
            if x > tri[2] and not X.has_simplex(tri + (x,)):
                return tuple(sorted(tri + (x,)))
    for tet in sorted(X.simplices(3)):
        common = X.neighbors(tet[0])
        for v in tet[1:]:
            common = common & X.neighbors(v)
        for x in sorted(common):
            if x > tet[3]:
                return tuple(sorted(tet + (x,)))
    return None


def is_flag(X: SimplicialComplex) -> Verdict:
    """Every clique of the adjacency relation spans a stored simplex.

    5-cliques always fail because the dimension is capped at 3.
    """
    w = flag_witness(X)
    if w is None:
        return passed("is_flag")
    return failed("is_flag", {"kind": "empty_clique", "vertices": list(w)},
                  detail=f"clique {w} spans no simplex")


# -- chordless cycle enumeration --------------------------------------------


def full_cycles(X: SimplicialComplex, min_len: int = 4, max_len: int = 4,
                cap: int = DEFAULT_CYCLE_CAP) -> list:
    """All chordless cycles with length in ``[min_len, max_len]``.

    Each cycle is reported once, in canonical form.  ``max_len`` above the
    safety cap raises :class:`BoundExceeded`; pass a larger ``cap`` to allow
    longer searches.
    """
    if min_len < 4:
        raise ValueError("cycles start at length 4")
    if min_len > max_len:
        raise ValueError("empty length range")
    if max_len > cap:
        raise BoundExceeded(f"max_len {max_len} above safety cap {cap}")

    out = []
    adj = X._adj
    for s in range(X.vertex_count):
        if not X.has_vertex(s):
            continue
        s_adj = adj[s]
        # DFS over chordless paths (s, v1, ..., vt) with vi > s; a cycle is
        # emitted when the tip is adjacent to s, and only in the orientation
        # with path[1] < tip, so each cycle appears exactly once.
        stack = [((s, v1), frozenset((s, v1))) for v1 in sorted(s_adj) if v1 > s]
        while stack:
            path, used = stack.pop()
            tip = path[-1]
            for u in sorted(adj[tip]):
                if u <= s or u in used:
                    continue
                # chord tests against everything before the tip
                if any(p in adj[u] for p in path[1:-1]):
                    continue
                if u in s_adj:
                    if min_len <= len(path) + 1 <= max_len and path[1] < u:
                        out.append(Cycle(canonical_cycle(path + (u,)), is_full=True))
                    # extending past u would leave the chord u~s in place
                    continue
                if len(path) + 1 < max_len:
                    stack.append((path + (u,), used | {u}))
    return sorted(out, key=lambda c: (len(c.vertices), c.vertices))
