"""Local curvature checkers: largeness, wheels, dwheels, and dwheel location.

A k-wheel is a cone vertex over a chordless k-cycle; a dwheel glues two
wheels along the pattern (apex, apex', shared) with the first rim vertices
either identified or joined by an edge.  The location checker asks every
small-boundary dwheel to fit inside a single 1-ball.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .complexes import (
    DEFAULT_CYCLE_CAP,
    Cycle,
    SimplicialComplex,
    canonical_cycle,
    chords,
    full_cycles,
    is_flag,
)
from .errors import NotACovering
from .verdicts import Verdict, failed, passed, timed


@dataclass(frozen=True)
class Wheel:
    """Cone over a chordless cycle: ``center`` adjacent to every rim vertex,
    with all cone triangles present in the host complex."""

    center: int
    rim: tuple  # canonical cyclic order

    @property
    def k(self) -> int:
        return len(self.rim)

    @property
    def vertex_set(self) -> frozenset:
        return frozenset((self.center,) + self.rim)

    def validate(self, X: SimplicialComplex) -> bool:
        r = self.rim
        k = len(r)
        if chords(X, r):
            return False
        for i in range(k):
            if not X.has_simplex((self.center, r[i], r[(i + 1) % k])):
                return False
        return True

    def to_json(self):
        return {"kind": "wheel", "center": self.center, "rim": list(self.rim)}


@dataclass(frozen=True)
class DWheel:
    """Two wheels glued along (apex, apex', shared).

    The first wheel is (apex; rim1..., shared, apex'), the second
    (apex'; rim2..., shared, apex); ``rim1``/``rim2`` hold only the free
    boundary arcs.  ``junction`` records whether the arcs' first vertices
    are identified or joined by an edge.
    """

    apexes: tuple
    shared: int
    rim1: tuple
    rim2: tuple
    junction: str  # "identified" | "edge"

    @property
    def k(self) -> int:
        return len(self.rim1) + 2

    @property
    def l(self) -> int:
        return len(self.rim2) + 2

    @property
    def type(self) -> tuple:
        return (self.k, self.l)

    @property
    def boundary_length(self) -> int:
        base = self.k + self.l
        return base - 4 if self.junction == "identified" else base - 3

    def boundary(self) -> tuple:
        """The boundary cycle: rim1, shared, reversed rim2 (last vertex
        dropped when the junction identifies it with rim1's first)."""
        tail = self.rim2[::-1]
        if self.junction == "identified":
            tail = tail[:-1]
        return self.rim1 + (self.shared,) + tail

    @property
    def wheels(self) -> tuple:
        v0, v0p = self.apexes
        return (
            Wheel(v0, canonical_cycle(self.rim1 + (self.shared, v0p))),
            Wheel(v0p, canonical_cycle(self.rim2 + (self.shared, v0))),
        )

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.apexes) | {self.shared} | set(self.rim1) | set(self.rim2)

    def validate(self, X: SimplicialComplex) -> bool:
        w1, w2 = self.wheels
        if not (w1.validate(X) and w2.validate(X)):
            return False
        a, b = self.rim1[0], self.rim2[0]
        if self.junction == "identified":
            return a == b
        return a != b and X.adjacent(a, b)

    def to_json(self):
        return {
            "kind": "dwheel",
            "apexes": list(self.apexes),
            "shared": self.shared,
            "rims": [list(self.rim1), list(self.rim2)],
            "junction": self.junction,
            "type": list(self.type),
            "boundary_length": self.boundary_length,
        }


# -- largeness ---------------------------------------------------------------


@timed
def is_k_large(X: SimplicialComplex, k: int) -> Verdict:
    """Flag and no chordless j-cycle for j < k.

    A flagness failure is a failing verdict (with the empty clique as
    witness), not an error.
    """
    if k < 4:
        raise ValueError("largeness starts at k = 4")
    fv = is_flag(X)
    if not fv.passed:
        return failed("is_k_large", fv.witness, detail="not flag: " + fv.detail, k=k)
    if k > 4:
        offenders = full_cycles(X, 4, k - 1, cap=max(DEFAULT_CYCLE_CAP, k - 1))
        if offenders:
            shortest = offenders[0]
            return failed("is_k_large", shortest,
                          detail=f"full {len(shortest)}-cycle present", k=k,
                          cycles=len(offenders))
    return passed("is_k_large", k=k)


@timed
def is_locally_k_large(X: SimplicialComplex, k: int) -> Verdict:
    """Every link (of every simplex) is k-large.

    The witness names the simplex together with the offending configuration
    inside its link, mapped back to ambient vertex ids.
    """
    links = 0
    for sigma in X.all_simplices():
        link, vmap = X.link(sigma)
        links += 1
        inner = is_k_large(link, k)
        if not inner.passed:
            witness = inner.witness
            if isinstance(witness, Cycle):
                mapped = {"kind": "cycle_in_link", "simplex": list(sigma),
                          "cycle": [vmap[v] for v in witness.vertices]}
            else:
                mapped = {"kind": "clique_in_link", "simplex": list(sigma),
                          "vertices": [vmap[v] for v in witness["vertices"]]}
            return failed("is_locally_k_large", mapped,
                          detail=f"link of {sigma} is not {k}-large: {inner.detail}",
                          k=k, links_checked=links)
    return passed("is_locally_k_large", k=k, links_checked=links)


# -- wheels and dwheels --------------------------------------------------------


def wheels(X: SimplicialComplex, k_min: int = 4, k_max: int = DEFAULT_CYCLE_CAP,
           cap: int = DEFAULT_CYCLE_CAP) -> list:
    """All k-wheels with k in range, one per (center, canonical rim).

    Rims are the chordless cycles of each vertex link that stay chordless
    in the ambient complex (the two notions agree on flag complexes).
    """
    out = []
    for v in range(X.vertex_count):
        if not X.has_vertex(v):
            continue
        link, vmap = X.link((v,))
        if link.vertex_count < k_min:
            continue
        for cyc in full_cycles(link, k_min, min(k_max, link.vertex_count), cap=max(cap, k_max)):
            rim = tuple(vmap[u] for u in cyc.vertices)
            if not chords(X, rim):
                out.append(Wheel(v, canonical_cycle(rim)))
    return sorted(out, key=lambda w: (w.center, len(w.rim), w.rim))


def _oriented_arc(whl: Wheel, shared: int, other_apex: int) -> Optional[tuple]:
    """Free boundary arc (v1, ..., v_{k-2}) of a wheel read so its rim is
    (v1, ..., v_{k-2}, shared, other_apex); None when (shared, other_apex)
    is not a consecutive rim pair."""
    r = whl.rim
    k = len(r)
    for orient in (r, r[::-1]):
        for i in range(k):
            if orient[i] == shared and orient[(i + 1) % k] == other_apex:
                return tuple(orient[(i + 2 + j) % k] for j in range(k - 2))
    return None


def dwheels(X: SimplicialComplex, max_boundary: int) -> list:
    """All dwheels with boundary length at most ``max_boundary``, one per
    unordered wheel pair.

    Types are normalized with k >= l; for equal rim lengths the two wheels
    are ordered by (apex, arc)."""
    max_k = max_boundary  # second rim has length >= 4
    by_center = {}
    for whl in wheels(X, 4, max_k, cap=max(max_k, DEFAULT_CYCLE_CAP)):
        by_center.setdefault(whl.center, []).append(whl)

    seen = {}
    for v0, lst in by_center.items():
        for w1 in lst:
            rim = w1.rim
            k = len(rim)
            for i in range(k):
                for (w, v0p) in ((rim[i], rim[(i + 1) % k]), (rim[(i + 1) % k], rim[i])):
                    # rim read as (v1 ... v_{k-2}, w, v0'): w then v0' consecutive
                    if not X.adjacent(v0, v0p):
                        continue
                    arc1 = _oriented_arc(w1, w, v0p)
                    for w2 in by_center.get(v0p, ()):
                        arc2 = _oriented_arc(w2, w, v0)
                        if arc2 is None:
                            continue
                        l = len(arc2) + 2
                        v1, v1p = arc1[0], arc2[0]
                        if v1 == v1p:
                            junction = "identified"
                            blen = k + l - 4
                        elif X.adjacent(v1, v1p):
                            junction = "edge"
                            blen = k + l - 3
                        else:
                            continue
                        if blen > max_boundary:
                            continue
                        if k < l or (k == l and (v0p, arc2) < (v0, arc1)):
                            dw = DWheel((v0p, v0), w, arc2, arc1, junction)
                        else:
                            dw = DWheel((v0, v0p), w, arc1, arc2, junction)
                        key = (dw.apexes, dw.shared, dw.rim1, dw.rim2, dw.junction)
                        seen.setdefault(key, dw)
    return sorted(seen.values(),
                  key=lambda d: (d.boundary_length, d.type, d.apexes, d.shared, d.rim1, d.rim2))


def in_one_ball(X: SimplicialComplex, vertex_set: Iterable[int]) -> Optional[int]:
    """Some vertex whose closed neighborhood contains the whole set, or None.

    Candidate centers are the set's own vertices and their common neighbors.
    """
    vs = sorted(set(vertex_set))
    if not vs:
        raise ValueError("empty vertex set")
    candidates = set(vs)
    common = None
    for v in vs:
        nb = X.neighbors(v)
        common = set(nb) if common is None else common & nb
    candidates |= common
    for y in sorted(candidates):
        if all(a == y or X.adjacent(a, y) for a in vs):
            return y
    return None


@timed
def is_m_located(X: SimplicialComplex, m: int) -> Verdict:
    """Flag, and every dwheel with boundary length at most ``m`` lies in a
    1-ball.  The witness is the offending dwheel plus the exhausted center
    candidates."""
    if m < 6:
        raise ValueError("location starts at m = 6")
    fv = is_flag(X)
    if not fv.passed:
        return failed("is_m_located", fv.witness, detail="not flag: " + fv.detail, m=m)
    count = 0
    for dw in dwheels(X, m):
        count += 1
        verts = dw.vertex_set
        center = in_one_ball(X, verts)
        if center is None:
            common = None
            for v in verts:
                nb = X.neighbors(v)
                common = set(nb) if common is None else common & nb
            return failed(
                "is_m_located",
                {"kind": "unlocated_dwheel", "dwheel": dw.to_json(),
                 "candidates_tried": sorted(verts | common)},
                detail=f"({dw.k},{dw.l})-dwheel of boundary length {dw.boundary_length} "
                       "fits in no 1-ball",
                m=m, dwheels=count)
    return passed("is_m_located", m=m, dwheels=count)


# -- covering preservation -----------------------------------------------------


def _closed_star_vertices(X: SimplicialComplex, v: int) -> frozenset:
    return frozenset({v}) | X.neighbors(v)


def check_covering_map(f, cover: SimplicialComplex, base: SimplicialComplex,
                       full_at: Optional[Iterable[int]] = None):
    """Verify that the vertex map ``f`` restricts on every 1-ball to an
    isomorphism onto the span of its image.

    ``full_at`` optionally lists vertices where the restriction must in
    addition be surjective onto the whole 1-ball of the image.  Raises
    :class:`NotACovering` at the first violating 1-ball.
    """
    full_at = set(full_at) if full_at is not None else set()
    for v in cover.vertices:
        bv = _closed_star_vertices(cover, v)
        images = {}
        for u in bv:
            fu = f[u]
            if not base.has_vertex(fu):
                raise NotACovering(v, f"image {fu} of {u} is not a vertex of the base")
            if fu in images.values():
                raise NotACovering(v, f"not injective on the 1-ball ({u} collides)")
            images[u] = fu
        image_set = frozenset(images.values())
        # forward: simplices inside the 1-ball must map to simplices
        for d in range(1, 4):
            for s in cover.span(bv).simplices(d):
                if not base.has_simplex(tuple(images[u] for u in s)):
                    raise NotACovering(v, f"simplex {s} maps to a non-simplex")
        # backward: simplices of the image span must pull back
        inverse = {fu: u for u, fu in images.items()}
        for d in range(1, 4):
            for s in base.span(image_set).simplices(d):
                pre = tuple(sorted(inverse[x] for x in s))
                if not cover.has_simplex(pre):
                    raise NotACovering(v, f"image simplex {s} has no preimage in the 1-ball")
        if v in full_at and image_set != _closed_star_vertices(base, f[v]):
            raise NotACovering(v, "1-ball does not cover the full 1-ball of the image")


@timed
def check_covering_preservation(f, cover: SimplicialComplex, base: SimplicialComplex,
                                m: int, k: int) -> Verdict:
    """Metamorphic contract: a covering of an m-located (locally k-large)
    complex is itself m-located (locally k-large).

    ``f`` maps cover vertex ids to base vertex ids.  The covering condition
    is verified first and raises :class:`NotACovering` on failure.
    """
    check_covering_map(f, cover, base)
    base_m = is_m_located(base, m)
    base_k = is_locally_k_large(base, k)
    cover_m = is_m_located(cover, m)
    cover_k = is_locally_k_large(cover, k)
    if base_m.passed and not cover_m.passed:
        return failed("covering_preservation", cover_m.witness,
                      detail=f"base is {m}-located but the cover is not", m=m, k=k)
    if base_k.passed and not cover_k.passed:
        return failed("covering_preservation", cover_k.witness,
                      detail=f"base is locally {k}-large but the cover is not", m=m, k=k)
    return passed(
        "covering_preservation",
        detail=(f"base: {m}-located={base_m.passed}, locally-{k}-large={base_k.passed}; "
                f"cover: {cover_m.passed}, {cover_k.passed}"),
        m=m, k=k)
