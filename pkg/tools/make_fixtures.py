#!/usr/bin/env python3
"""Regenerate the degree-7 surface fixtures under fixtures/.

Two kinds of complexes are produced and verified with the library's own
checkers before being written:

* ``disk37_r3.cplx`` — a radius-3 disk of the triangular tiling with seven
  triangles around every interior vertex, built ring by ring.  Interior
  links are 7-cycles, boundary links are paths, so the complex is flag and
  locally 7-large.

* ``surf37_psl2_<q>.cplx`` — a closed orientable surface, all vertex
  degrees 7, obtained from the rotation action of PSL(2, q) generated by an
  order-2 and an order-3 element whose product has order 7.  Faces are the
  cosets of the order-3 subgroup, vertices the cosets of the order-7 one.
  The smallest candidate quotient that passes flagness and local
  7-largeness is kept.

Run from the repository root:  python3 tools/make_fixtures.py
"""

import sys
from itertools import product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from combcurv import build_complex, is_flag, is_locally_k_large  # noqa: E402
from combcurv.formats import serialize_text  # noqa: E402
from combcurv.metric import distances_from  # noqa: E402

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


# ---------------------------------------------------------------------------
# Degree-7 disk, ring by ring
# ---------------------------------------------------------------------------

def disk37(radius):
    """Triangular disk with 7 triangles around every interior vertex."""
    faces = []
    counter = [0]

    def new_vertex():
        counter[0] += 1
        return counter[0] - 1

    center = new_vertex()
    ring = [new_vertex() for _ in range(7)]
    down = {v: 1 for v in ring}
    for i, v in enumerate(ring):
        faces.append((center, v, ring[(i + 1) % 7]))

    for _ in range(radius - 1):
        children = {v: [] for v in ring}
        new_ring = []
        for p, v in enumerate(ring):
            up = 7 - 2 - down[v]
            for _ in range(up - 2):
                c = new_vertex()
                down[c] = 1
                children[v].append(c)
                new_ring.append(c)
            corner = new_vertex()
            down[corner] = 2
            children[v].append(corner)
            # the corner also leads the next parent's block (retroactively
            # fixing the first parent at wrap-around)
            children[ring[(p + 1) % len(ring)]].insert(0, corner)
            new_ring.append(corner)
        for p, v in enumerate(ring):
            kids = children[v]
            for a, b in zip(kids, kids[1:]):
                faces.append((v, a, b))
            faces.append((v, ring[(p + 1) % len(ring)], kids[-1]))
        ring = new_ring
    return build_complex(faces, name=f"disk37_r{radius}")


# ---------------------------------------------------------------------------
# Closed degree-7 surfaces from PSL(2, q)
# ---------------------------------------------------------------------------

def _norm(m, q):
    half = (q - 1) // 2
    for x in m:
        if x != 0:
            return m if x <= half else tuple((-y) % q for y in m)
    return m


def _mul(m, n, q):
    a, b, c, d = m
    e, f, g, h = n
    return _norm(((a * e + b * g) % q, (a * f + b * h) % q,
                  (c * e + d * g) % q, (c * f + d * h) % q), q)


def _order(m, q, cap=20):
    ident = _norm((1, 0, 0, 1), q)
    acc = m
    for k in range(1, cap + 1):
        if acc == ident:
            return k
        acc = _mul(acc, m, q)
    return None


def psl2_elements(q):
    out = []
    seen = set()
    for a, b, c in product(range(q), repeat=3):
        # solve a*d - b*c = 1 for d when possible
        if a != 0:
            d = (1 + b * c) * pow(a, q - 2, q) % q
            m = _norm((a, b, c, d), q)
            if m not in seen:
                seen.add(m)
                out.append(m)
        elif b != 0:
            # a = 0: need -b*c = 1, d free
            if (-b * c) % q == 1:
                for d in range(q):
                    m = _norm((0, b, c, d), q)
                    if m not in seen:
                        seen.add(m)
                        out.append(m)
    return out


def _closure(gens, q, limit):
    ident = _norm((1, 0, 0, 1), q)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = _mul(g, h, q)
                if gh not in seen:
                    seen.add(gh)
                    nxt.append(gh)
                    if len(seen) > limit:
                        return seen
        frontier = nxt
    return seen


def surf37(q):
    """Triangulated closed surface from the (2,3,7) rotation action of
    PSL(2, q); vertex cosets of the order-7 subgroup, face cosets of the
    order-3 one."""
    els = psl2_elements(q)
    n = len(els)
    assert n == q * (q * q - 1) // 2, "unexpected group order"
    by_order = {}
    for m in els:
        by_order.setdefault(_order(m, q), []).append(m)
    pair = None
    for x2 in by_order.get(2, []):
        for x3 in by_order.get(3, []):
            if _order(_mul(x2, x3, q), q) == 7 and len(_closure((x2, x3), q, n)) == n:
                pair = (x2, x3)
                break
        if pair:
            break
    if pair is None:
        raise RuntimeError(f"no (2,3,7) generating pair in PSL(2,{q})")
    x2, x3 = pair
    x7 = _mul(x2, x3, q)

    idx = {m: i for i, m in enumerate(els)}

    def coset_key(g, gen, order):
        members = []
        acc = g
        for _ in range(order):
            members.append(idx[acc])
            acc = _mul(acc, gen, q)
        return min(members)

    vertex_id = {}
    faces = set()
    for g in els:
        corners = []
        acc = g
        for _ in range(3):
            key = coset_key(acc, x7, 7)
            if key not in vertex_id:
                vertex_id[key] = len(vertex_id)
            corners.append(vertex_id[key])
            acc = _mul(acc, x3, q)
        tri = tuple(sorted(corners))
        if len(set(tri)) != 3:
            raise RuntimeError("degenerate face in quotient")
        faces.add(tri)
    return build_complex(sorted(faces), name=f"surf37_psl2_{q}")


# ---------------------------------------------------------------------------
# Verification and output
# ---------------------------------------------------------------------------

def verify(X, closed):
    problems = []
    if not is_flag(X).passed:
        problems.append("not flag")
    if not is_locally_k_large(X, 7).passed:
        problems.append("not locally 7-large")
    d0 = distances_from(X, X.vertices[0])
    if any(d0[v] == float("inf") for v in X.vertices):
        problems.append("not connected")
    tri_per_edge = {e: 0 for e in X.simplices(1)}
    for t in X.simplices(2):
        for a in range(3):
            for b in range(a + 1, 3):
                tri_per_edge[(t[a], t[b])] += 1
    if closed:
        if any(c != 2 for c in tri_per_edge.values()):
            problems.append("edge not in exactly two triangles")
        if any(X.degree(v) != 7 for v in X.vertices):
            problems.append("vertex of degree != 7")
    else:
        if any(c not in (1, 2) for c in tri_per_edge.values()):
            problems.append("edge in more than two triangles")
    return problems


def main():
    FIXTURES.mkdir(exist_ok=True)
    disk = disk37(3)
    problems = verify(disk, closed=False)
    if problems:
        raise SystemExit(f"disk37: {problems}")
    (FIXTURES / "disk37_r3.cplx").write_text(serialize_text(disk))
    print(f"disk37_r3: {disk.counts()} euler={disk.euler_characteristic()} OK")

    for q in (7, 13):
        surf = surf37(q)
        problems = verify(surf, closed=True)
        print(f"surf37_psl2_{q}: {surf.counts()} euler={surf.euler_characteristic()} "
              f"problems={problems or 'none'}")
        if not problems:
            (FIXTURES / f"surf37_psl2_{q}.cplx").write_text(serialize_text(surf))
            print(f"kept surf37_psl2_{q}")
            break


if __name__ == "__main__":
    main()
