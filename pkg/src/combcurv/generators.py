"""Deterministic generators for the test corpus.

Every generator is a pure function of its parameters: identical parameters
give byte-identical complexes after canonical serialization.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .complexes import SimplicialComplex, build_complex

# Standard icosahedron combinatorics: 12 vertices, 30 edges, 20 faces,
# every vertex of degree 5.
ICOSAHEDRON_FACES = (
    (0, 11, 5), (0, 5, 1), (0, 1, 7), (0, 7, 10), (0, 10, 11),
    (1, 5, 9), (5, 11, 4), (11, 10, 2), (10, 7, 6), (7, 1, 8),
    (3, 9, 4), (3, 4, 2), (3, 2, 6), (3, 6, 8), (3, 8, 9),
    (5, 4, 9), (2, 4, 11), (6, 2, 10), (8, 6, 7), (9, 8, 1),
)

OCTAHEDRON_FACES = (
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1),
    (5, 2, 1), (5, 3, 2), (5, 4, 3), (5, 1, 4),
)


def triangle() -> SimplicialComplex:
    return build_complex([[0, 1, 2]], name="triangle")


def tetrahedron() -> SimplicialComplex:
    return build_complex([[0, 1, 2, 3]], name="tetrahedron")


def cycle_complex(n: int) -> SimplicialComplex:
    if n < 3:
        raise ValueError("cycle length must be at least 3")
    return build_complex([[i, (i + 1) % n] for i in range(n)], name=f"c{n}")


def octahedron() -> SimplicialComplex:
    return build_complex(OCTAHEDRON_FACES, name="octahedron")


def icosahedron() -> SimplicialComplex:
    return build_complex(ICOSAHEDRON_FACES, name="icosahedron")


def boundary_4_simplex() -> SimplicialComplex:
    return build_complex(list(combinations(range(5), 4)), name="boundary_4_simplex")


def geodesic_sphere(k: int) -> SimplicialComplex:
    """Icosahedron with each face subdivided into k^2 triangles.

    Faces sharing an edge reuse the subdivision points of that edge via a
    canonical key (position measured from the smaller endpoint), so the
    result has exactly 10k^2 + 2 vertices: the 12 originals of degree 5 and
    the rest of degree 6.
    """
    if k < 1:
        raise ValueError("subdivision parameter must be at least 1")
    ids = {}

    def vid(key):
        if key not in ids:
            ids[key] = len(ids)
        return ids[key]

    def grid_key(face_idx, a, b, c, i, j):
        # barycentric point (k-i-j, i, j) on face (a, b, c)
        if i == 0 and j == 0:
            return ("v", a)
        if i == k and j == 0:
            return ("v", b)
        if i == 0 and j == k:
            return ("v", c)
        if j == 0:
            return ("e", a, b, i) if a < b else ("e", b, a, k - i)
        if i == 0:
            return ("e", a, c, j) if a < c else ("e", c, a, k - j)
        if i + j == k:
            return ("e", b, c, j) if b < c else ("e", c, b, k - j)
        return ("f", face_idx, i, j)

    for v in range(12):
        vid(("v", v))
    faces = []
    for idx, (a, b, c) in enumerate(ICOSAHEDRON_FACES):
        def pt(i, j):
            return vid(grid_key(idx, a, b, c, i, j))

        for i in range(k):
            for j in range(k - i):
                faces.append((pt(i, j), pt(i + 1, j), pt(i, j + 1)))
                if i + j < k - 1:
                    faces.append((pt(i + 1, j), pt(i + 1, j + 1), pt(i, j + 1)))
    return build_complex(faces, name=f"geodesic_sphere_{k}")


def tri_torus(m: int, n: int) -> SimplicialComplex:
    """Equilateral-triangle lattice quotient with m*n vertices, all of
    degree 6: neighbors differ by (1,0), (0,1) or (1,1) modulo (m, n)."""
    if m < 4 or n < 4:
        raise ValueError("torus dimensions must be at least 4")

    def v(i, j):
        return (i % m) * n + (j % n)

    faces = []
    for i in range(m):
        for j in range(n):
            faces.append((v(i, j), v(i + 1, j), v(i + 1, j + 1)))
            faces.append((v(i, j), v(i, j + 1), v(i + 1, j + 1)))
    return build_complex(faces, name=f"tri_torus_{m}_{n}")


def flag_completion(n: int, edges, name=None) -> SimplicialComplex:
    """Complex whose simplices are the cliques of a graph, capped at
    4 vertices (the dimension cap)."""
    adj = [set() for _ in range(n)]
    for (u, v) in edges:
        adj[u].add(v)
        adj[v].add(u)
    maximal = [[v] for v in range(n)]
    maximal += [list(e) for e in edges]
    for (u, v) in edges:
        for w in sorted(adj[u] & adj[v]):
            if w > v:
                maximal.append([u, v, w])
                for x in sorted(adj[u] & adj[v] & adj[w]):
                    if x > w:
                        maximal.append([u, v, w, x])
    return build_complex(maximal, name=name)


def random_flag(n: int, p: float, seed: int) -> SimplicialComplex:
    """Flag completion (cliques up to size 4) of a seeded random graph.

    Reproducible across platforms: edges are drawn in fixed (u, v) order
    from ``random.Random(seed)``.
    """
    if not 0 <= p <= 1:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return flag_completion(n, edges, name=f"random_flag_{n}_{p}_{seed}")


GENERATORS = {
    "triangle": (triangle, 0),
    "tetrahedron": (tetrahedron, 0),
    "c_n": (cycle_complex, 1),
    "octahedron": (octahedron, 0),
    "icosahedron": (icosahedron, 0),
    "boundary_4_simplex": (boundary_4_simplex, 0),
    "geodesic_sphere": (geodesic_sphere, 1),
    "tri_torus": (tri_torus, 2),
    "random_flag": (random_flag, 3),
}


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    params: tuple = ()


def generate(spec: GeneratorSpec) -> SimplicialComplex:
    if spec.name not in GENERATORS:
        raise ValueError(f"unknown generator {spec.name!r}; known: {sorted(GENERATORS)}")
    fn, arity = GENERATORS[spec.name]
    if len(spec.params) != arity:
        raise ValueError(f"{spec.name} takes {arity} parameter(s), got {len(spec.params)}")
    return fn(*spec.params)


def parse_generator_args(name: str, raw_params) -> GeneratorSpec:
    """CLI helper: coerce string parameters to the expected types."""
    if name not in GENERATORS:
        raise ValueError(f"unknown generator {name!r}; known: {sorted(GENERATORS)}")
    coerced = []
    for s in raw_params:
        try:
            coerced.append(int(s))
        except ValueError:
            coerced.append(float(s))
    return GeneratorSpec(name, tuple(coerced))
