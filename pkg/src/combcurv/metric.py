"""Path-metric machinery on the 1-skeleton.

Distances are hop counts in the 1-skeleton.  On top of BFS this module
provides combinatorial balls and spheres, geodesic intervals sliced into
layers, the layered descent checker with its triangle (T) and vertex (V)
conditions, the projection cross-check that consumes it, and an exact
four-point hyperbolicity constant for small complexes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .complexes import SimplicialComplex
from .curvature import is_locally_k_large, is_m_located
from .errors import DisconnectedError, PreconditionNotMet, TooLarge
from .verdicts import Verdict, failed, passed, timed

INF = float("inf")

DELTA_VERTEX_CAP = 200


@dataclass(frozen=True)
class DistanceField:
    """Hop distances from a base vertex; unreachable vertices get inf."""

    base: int
    dist: tuple

    def __getitem__(self, v):
        return self.dist[v]


def distances_from(X: SimplicialComplex, base: int) -> DistanceField:
    cached = X._dist_cache.get(base)
    if cached is not None:
        return cached
    if not X.has_vertex(base):
        raise ValueError(f"vertex {base} not in complex")
    dist = [INF] * X.vertex_count
    dist[base] = 0
    q = deque([base])
    while q:
        v = q.popleft()
        for u in X.neighbors(v):
            if dist[u] > dist[v] + 1:
                dist[u] = dist[v] + 1
                q.append(u)
    field_ = DistanceField(base, tuple(dist))
    X._dist_cache[base] = field_
    return field_


def distance(X: SimplicialComplex, u: int, v: int):
    return distances_from(X, u)[v]


def ball(X: SimplicialComplex, v: int, i: int) -> frozenset:
    """Vertices at distance at most ``i`` from ``v``."""
    if i < 0:
        raise ValueError("radius must be non-negative")
    d = distances_from(X, v)
    return frozenset(u for u in range(X.vertex_count) if X.has_vertex(u) and d[u] <= i)


def sphere(X: SimplicialComplex, v: int, i: int) -> frozenset:
    """Vertices at distance exactly ``i`` from ``v``."""
    if i < 0:
        raise ValueError("radius must be non-negative")
    d = distances_from(X, v)
    return frozenset(u for u in range(X.vertex_count) if X.has_vertex(u) and d[u] == i)


def ball_span(X: SimplicialComplex, v: int, i: int) -> SimplicialComplex:
    """The ball as a full subcomplex (same vertex ids)."""
    return X.span(ball(X, v, i))


def sphere_span(X: SimplicialComplex, v: int, i: int) -> SimplicialComplex:
    return X.span(sphere(X, v, i))


# -- geodesic intervals ------------------------------------------------------


@dataclass(frozen=True)
class LayeredInterval:
    """Vertices on geodesics between two endpoints, sliced by distance from
    the first endpoint: ``layers[k]`` is the slice at distance k."""

    endpoints: tuple
    n: int
    layers: tuple

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for layer in self.layers for v in layer)


def interval(X: SimplicialComplex, o: int, o2: int) -> LayeredInterval:
    do = distances_from(X, o)
    do2 = distances_from(X, o2)
    n = do[o2]
    if n == INF:
        raise DisconnectedError(f"vertices {o} and {o2} are not connected")
    layers = []
    for k in range(n + 1):
        layers.append(frozenset(
            v for v in range(X.vertex_count)
            if X.has_vertex(v) and do[v] == k and do2[v] == n - k
        ))
    return LayeredInterval((o, o2), n, tuple(layers))


def interval_thinness(X: SimplicialComplex, o: int, o2: int):
    """Maximum pairwise distance inside any interval layer, measured in X.

    Returns ``(thinness, witness_pair)`` where the witness realizes the
    maximum (None for degenerate intervals).
    """
    itv = interval(X, o, o2)
    best = 0
    witness = None
    for layer in itv.layers:
        for u, v in combinations(sorted(layer), 2):
            d = distances_from(X, u)[v]
            if d > best:
                best = d
                witness = (u, v)
    return best, witness


# -- layered descent property ------------------------------------------------


@dataclass(frozen=True)
class SDReport:
    """Per-radius outcome of the descent conditions around a base vertex.

    ``results[i]`` holds the verdicts of the triangle condition (T) and the
    vertex condition (V) at radius i, for i = 1..max_radius.
    """

    base: int
    max_radius: int
    results: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(t.passed and v.passed for (t, v) in self.results.values())

    def first_failure(self):
        for i in sorted(self.results):
            t, v = self.results[i]
            if not t.passed:
                return t
            if not v.passed:
                return v
        return None

    def to_json(self, with_timings: bool = False):
        return {
            "check": "sd_prime",
            "base": self.base,
            "max_radius": self.max_radius,
            "status": "pass" if self.passed else "fail",
            "radii": {
                str(i): {"T": t.to_json(with_timings), "V": v.to_json(with_timings)}
                for i, (t, v) in self.results.items()
            },
        }


def _triangle_condition(X, dist, i) -> Verdict:
    """(T): every edge with both endpoints at distance i+1 has a link vertex
    at distance <= i."""
    checked = 0
    for (u, v) in sorted(X.simplices(1)):
        if dist[u] != i + 1 or dist[v] != i + 1:
            continue
        checked += 1
        if not any(
            dist[t] <= i and X.has_simplex((u, v, t))
            for t in X.neighbors(u) & X.neighbors(v)
        ):
            return failed("sd_T", {"kind": "edge", "edge": [u, v], "radius": i},
                          detail=f"edge ({u},{v}) in sphere {i + 1} sees nothing in ball {i}",
                          edges_checked=checked)
    return passed("sd_T", edges_checked=checked)


def _vertex_condition(X, dist, i) -> Verdict:
    """(V): for v at distance i+1 and neighbors u,w of v at distance <= i,
    some neighbor t of v at distance <= i is adjacent to both.

    Adjacent pairs u ~ w satisfy the condition degenerately (t may coincide
    with one of them); only non-adjacent pairs require a genuine t.
    """
    pairs = 0
    for v in range(X.vertex_count):
        if not X.has_vertex(v) or dist[v] != i + 1:
            continue
        down = sorted(u for u in X.neighbors(v) if dist[u] <= i)
        for u, w in combinations(down, 2):
            pairs += 1
            if X.adjacent(u, w):
                continue
            if not any(t != u and t != w and X.adjacent(t, u) and X.adjacent(t, w)
                       for t in down):
                return failed("sd_V", {"kind": "vertex", "vertex": v, "pair": [u, w], "radius": i},
                              detail=f"no common neighbor below radius {i + 1} for ({u},{w}) in link of {v}",
                              pairs_checked=pairs)
    return passed("sd_V", pairs_checked=pairs)


def check_sd_prime(X: SimplicialComplex, o: int, n: int) -> SDReport:
    """Descent property around ``o`` up to radius ``n``: conditions (T) and
    (V) at every i = 1..n."""
    dist = distances_from(X, o)
    results = {}
    for i in range(1, n + 1):
        results[i] = (_triangle_condition(X, dist, i), _vertex_condition(X, dist, i))
    return SDReport(base=o, max_radius=n, results=results)


@timed
def check_projection_lemma(X: SimplicialComplex, o: int, n: int) -> Verdict:
    """Downward-projection cross-check.

    Requires 8-location, local 5-largeness, and the descent property up to
    radius ``n``.  Then for every radius i <= n and every configuration
    (v in sphere i+1; non-adjacent y,z below; common neighbor x below;
    y',z' two steps down closing triangles with x), asserts that y' and z'
    are distinct, mutually adjacent, and not adjacent across to z resp. y.
    """
    for name, verdict in (("is_m_located(X, 8)", is_m_located(X, 8)),
                          ("is_locally_k_large(X, 5)", is_locally_k_large(X, 5))):
        if not verdict.passed:
            raise PreconditionNotMet(name, verdict.detail)
    sd = check_sd_prime(X, o, n)
    if not sd.passed:
        raise PreconditionNotMet(f"check_sd_prime(X, {o}, {n})",
                                 sd.first_failure().detail)

    dist = distances_from(X, o)
    instances = 0
    for i in range(1, n + 1):
        for v in range(X.vertex_count):
            if not X.has_vertex(v) or dist[v] != i + 1:
                continue
            down = sorted(u for u in X.neighbors(v) if dist[u] <= i)
            for y, z in combinations(down, 2):
                if X.adjacent(y, z):
                    continue
                xs = [x for x in down if X.adjacent(x, y) and X.adjacent(x, z)]
                for x in xs:
                    ys = [t for t in X.neighbors(x) & X.neighbors(y)
                          if dist[t] <= i - 1 and X.has_simplex((x, y, t))]
                    zs = [t for t in X.neighbors(x) & X.neighbors(z)
                          if dist[t] <= i - 1 and X.has_simplex((x, z, t))]
                    for yp in ys:
                        for zp in zs:
                            instances += 1
                            ok = (yp != zp and not X.adjacent(yp, z)
                                  and not X.adjacent(y, zp) and X.adjacent(yp, zp))
                            if not ok:
                                return failed(
                                    "projection_lemma",
                                    {"kind": "projection_instance", "radius": i,
                                     "v": v, "y": y, "z": z, "x": x,
                                     "y_prime": yp, "z_prime": zp},
                                    detail="projected pair violates the expected relations",
                                    instances=instances)
    return passed("projection_lemma", detail=f"{instances} instances verified",
                  instances=instances)


# -- four-point hyperbolicity -------------------------------------------------


def delta_four_point(X: SimplicialComplex, cap: int = DELTA_VERTEX_CAP) -> Fraction:
    """Minimal delta so that every vertex 4-tuple satisfies the four-point
    condition; exact over half-integers.

    Cost grows as the fourth power of the vertex count, hence the cap.
    """
    verts = X.vertices
    if len(verts) > cap:
        raise TooLarge(f"{len(verts)} vertices exceeds delta cap {cap}")
    if len(verts) < 4:
        return Fraction(0)
    dist = {v: distances_from(X, v) for v in verts}
    for u in verts:
        for v in verts:
            if dist[u][v] == INF:
                raise DisconnectedError("four-point constant needs a connected complex")
    worst = 0
    for x, y, z, w in combinations(verts, 4):
        s1 = dist[x][y] + dist[z][w]
        s2 = dist[x][z] + dist[y][w]
        s3 = dist[x][w] + dist[y][z]
        smid, smax = sorted((s1, s2, s3))[1:]
        if smax - smid > worst:
            worst = smax - smid
    return Fraction(worst, 2)
