"""Inductive construction of universal-cover balls.

Starting from the 1-ball of a base vertex, each expansion stage collects the
uncovered link directions on the current boundary sphere, glues equivalence
classes of them (transitive closure of "same target, adjacent bases") as new
vertices, wires the prescribed edges, and flag-completes.  Three invariants
are re-verified after every stage:

    (P) the stage balls are exactly the metric balls of the final complex;
    (Q) the ball satisfies the descent property one radius below its own;
    (R) the sheet map restricts on 1-balls to isomorphisms onto image spans,
        and onto full 1-balls at interior vertices.

Constructions whose input fails the entry hypotheses (8-location, local
5-largeness) still run, but invariant failures are then recorded as
expected-failure diagnostics instead of raising.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, replace

from .complexes import SimplicialComplex, is_flag
from .curvature import check_covering_map, is_locally_k_large, is_m_located
from .errors import HypothesisViolation, InvariantViolation, NotACovering, NotFlag, TooLarge
from .metric import SDReport, check_sd_prime, distances_from, interval_thinness
from .verdicts import Verdict, failed, passed

DEFAULT_STAGE_LIMIT = 10
DEFAULT_VERTEX_LIMIT = 100_000


@dataclass(frozen=True)
class ZClass:
    """One equivalence class of uncovered directions: all members share the
    same target vertex ``z``; their bases are connected through the boundary
    sphere."""

    z: int
    members: tuple  # sorted (base, z) pairs

    @property
    def representative(self):
        return self.members[0]

    @property
    def bases(self) -> tuple:
        return tuple(b for (b, _z) in self.members)

    def to_json(self):
        return {"kind": "z_class", "z": self.z, "members": [list(m) for m in self.members]}


@dataclass(frozen=True)
class CoverState:
    """One stage of the cover construction.

    Cover vertex ids are stable across stages; the base vertex is id 0 and
    ``birth[v]`` (the stage at which v appeared) equals its distance from
    the base.  ``history`` keeps the ball of every earlier stage.
    """

    stage: int
    ball: SimplicialComplex
    base: int
    sheet_map: tuple
    target: SimplicialComplex
    birth: tuple
    hypotheses_ok: bool
    history: tuple = ()
    last_classes: tuple = ()
    warnings: tuple = ()

    def sphere_ids(self, radius: int) -> list:
        return [v for v in range(self.ball.vertex_count) if self.birth[v] == radius]

    def interior_ids(self) -> list:
        return [v for v in range(self.ball.vertex_count) if self.birth[v] < self.stage]

    def fibers(self) -> dict:
        out = defaultdict(int)
        for x in self.sheet_map:
            out[x] += 1
        return dict(out)

    def to_json(self):
        return {
            "name": f"cover_ball_stage_{self.stage}",
            "maximal_simplices": [list(s) for s in self.ball.maximal_simplices()],
            "sheet_map": list(self.sheet_map),
            "stage": self.stage,
            "base": self.base,
        }


def _flag_faces_from_graph(n: int, edges, on_five_clique="error"):
    """Downward-closed faces of the flag completion of a graph, capped at
    tetrahedra.  ``on_five_clique`` is 'error' or 'cap'."""
    adj = [set() for _ in range(n)]
    for (u, v) in edges:
        adj[u].add(v)
        adj[v].add(u)
    faces = {0: {(v,) for v in range(n)}, 1: set(), 2: set(), 3: set()}
    for (u, v) in edges:
        faces[1].add(tuple(sorted((u, v))))
    for (u, v) in sorted(faces[1]):
        for w in sorted(adj[u] & adj[v]):
            if w > v:
                faces[2].add((u, v, w))
                for x in sorted(adj[u] & adj[v] & adj[w]):
                    if x > w:
                        faces[3].add((u, v, w, x))
                        bigger = adj[u] & adj[v] & adj[w] & adj[x]
                        if on_five_clique == "error" and any(y > x for y in bigger):
                            raise InvariantViolation(
                                "R", {"kind": "five_clique",
                                      "vertices": [u, v, w, x, max(bigger)]},
                                "flag completion exceeds dimension 3")
    return faces


def _verify_invariants(state: CoverState):
    """Check (P), (Q), (R) on a state; returns the list of violations."""
    problems = []
    ball, birth = state.ball, state.birth

    # (P): birth layers are the metric layers, and earlier stage balls are
    # exactly the induced balls of the current complex.
    dist = distances_from(ball, state.base)
    for v in range(ball.vertex_count):
        if dist[v] != birth[v]:
            problems.append(("P", {"kind": "layer_mismatch", "vertex": v,
                                   "distance": dist[v], "birth": birth[v]},
                             f"vertex {v} born at stage {birth[v]} but at distance {dist[v]}"))
            break
    else:
        for j, old in enumerate(state.history, start=1):
            span = ball.span([v for v in range(ball.vertex_count) if birth[v] <= j])
            same = all(span.simplices(d) == old.simplices(d) for d in range(4))
            if not same:
                problems.append(("P", {"kind": "stage_span_mismatch", "stage": j},
                                 f"induced ball at radius {j} differs from the stage-{j} ball"))
                break

    # (Q): descent property one radius below the current stage.
    sd = check_sd_prime(ball, state.base, state.stage - 1)
    if not sd.passed:
        f = sd.first_failure()
        problems.append(("Q", f.witness, f.detail))

    # (R): sheet map is a local isomorphism, full at interior vertices.
    try:
        check_covering_map(state.sheet_map, ball, state.target,
                           full_at=state.interior_ids())
    except NotACovering as exc:
        problems.append(("R", {"kind": "local_isomorphism", "vertex": exc.vertex},
                         exc.reason))
    return problems


def _apply_invariants(state: CoverState) -> CoverState:
    problems = _verify_invariants(state)
    if not problems:
        return state
    if state.hypotheses_ok:
        which, witness, detail = problems[0]
        raise InvariantViolation(which, witness, detail)
    diags = tuple(HypothesisViolation(w, wit, det) for (w, wit, det) in problems)
    return replace(state, warnings=state.warnings + diags)


def init_cover(X: SimplicialComplex, base: int) -> CoverState:
    """Stage-1 state: the 1-ball of the base vertex, sheet map the identity
    up to relabeling.  The input must be flag."""
    if not X.has_vertex(base):
        raise ValueError(f"vertex {base} not in complex")
    fv = is_flag(X)
    if not fv.passed:
        raise NotFlag(f"cover construction needs a flag complex: {fv.detail}")
    hyp = is_m_located(X, 8).passed and is_locally_k_large(X, 5).passed

    sheet = (base,) + tuple(sorted(X.neighbors(base)))
    back = {x: i for i, x in enumerate(sheet)}
    src = X.span(set(sheet))
    faces = {d: [tuple(sorted(back[v] for v in s)) for s in src.simplices(d)]
             for d in range(4)}
    ball = SimplicialComplex(len(sheet), faces, name="cover_ball_stage_1")
    state = CoverState(
        stage=1, ball=ball, base=0, sheet_map=sheet, target=X,
        birth=(0,) + (1,) * (len(sheet) - 1), hypotheses_ok=hyp,
        history=(ball,))
    return _apply_invariants(state)


def expand_ball(state: CoverState, vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> CoverState:
    """Grow the ball by one radius.

    New vertices are the equivalence classes of uncovered directions on the
    boundary sphere; edges follow the gluing rules (base to class, and class
    to class through a common base with adjacent targets); higher simplices
    come from flag completion.
    """
    X = state.target
    ball = state.ball
    i = state.stage
    f = state.sheet_map

    zpairs = []
    for w in state.sphere_ids(i):
        covered = {f[u] for u in ball.neighbors(w)}
        for z in sorted(X.neighbors(f[w]) - covered):
            zpairs.append((w, z))

    # transitive closure of: same target, bases adjacent in the ball
    parent = {p: p for p in zpairs}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    def union(p, q):
        rp, rq = find(p), find(q)
        if rp != rq:
            parent[max(rp, rq)] = min(rp, rq)

    by_z = defaultdict(list)
    for (w, z) in zpairs:
        by_z[z].append(w)
    for z, bases in by_z.items():
        base_set = set(bases)
        for w in bases:
            for u in ball.neighbors(w):
                if u in base_set:
                    union((w, z), (u, z))

    groups = defaultdict(list)
    for p in zpairs:
        groups[find(p)].append(p)
    classes = tuple(ZClass(z=root[1], members=tuple(sorted(members)))
                    for root, members in sorted(groups.items()))

    n_old = ball.vertex_count
    if n_old + len(classes) > vertex_limit:
        raise TooLarge(f"cover ball would exceed {vertex_limit} vertices")
    class_id = {cls: n_old + idx for idx, cls in enumerate(classes)}

    edges = set(ball.simplices(1))
    at_base = defaultdict(list)
    for cls in classes:
        cid = class_id[cls]
        for (w, _z) in cls.members:
            edges.add(tuple(sorted((w, cid))))
            at_base[w].append(cls)
    for w, here in at_base.items():
        for a in range(len(here)):
            for b in range(a + 1, len(here)):
                c1, c2 = here[a], here[b]
                if X.adjacent(c1.z, c2.z):
                    edges.add(tuple(sorted((class_id[c1], class_id[c2]))))

    n_new = n_old + len(classes)
    faces = _flag_faces_from_graph(
        n_new, edges, on_five_clique="error" if state.hypotheses_ok else "cap")
    new_ball = SimplicialComplex(n_new, faces, name=f"cover_ball_stage_{i + 1}")

    new_state = CoverState(
        stage=i + 1,
        ball=new_ball,
        base=0,
        sheet_map=f + tuple(cls.z for cls in classes),
        target=X,
        birth=state.birth + (i + 1,) * len(classes),
        hypotheses_ok=state.hypotheses_ok,
        history=state.history + (new_ball,),
        last_classes=classes,
        warnings=state.warnings,
    )
    return _apply_invariants(new_state)


def verify_equiv_shortcut(state: CoverState) -> Verdict:
    """Every two members of a class admit a shortcut: a third class member
    whose base is adjacent to (or equal to) both bases.

    Degenerate shortcuts (the shortcut base being one of the two, which
    requires the two bases to be adjacent) are accepted and counted.
    """
    ball = state.ball
    pairs = 0
    degenerate = 0
    for cls in state.last_classes:
        bases = cls.bases
        for a in range(len(bases)):
            for b in range(a + 1, len(bases)):
                u, w = bases[a], bases[b]
                pairs += 1
                hit = None
                for y in bases:
                    if (y == u or ball.adjacent(y, u)) and (y == w or ball.adjacent(y, w)):
                        hit = y
                        break
                if hit is None:
                    return failed(
                        "equiv_shortcut",
                        {"kind": "missing_shortcut", "z": cls.z, "pair": [u, w],
                         "bases": list(bases)},
                        detail=f"no shortcut between bases {u} and {w} for target {cls.z}",
                        pairs=pairs)
                if hit in (u, w):
                    degenerate += 1
    return passed("equiv_shortcut", pairs=pairs, degenerate=degenerate)


@dataclass(frozen=True)
class CoverReport:
    """Outcome of a multi-stage construction."""

    state: CoverState
    stage_stats: tuple
    sd: SDReport
    covering: Verdict
    shortcut: Verdict
    interior_located: Verdict
    interior_large: Verdict
    max_interior_thinness: int

    @property
    def passed(self) -> bool:
        return (self.sd.passed and self.covering.passed and self.shortcut.passed
                and not self.state.warnings)

    def to_json(self, with_timings: bool = False):
        return {
            "check": "build_cover",
            "status": "pass" if self.passed else "fail",
            "stage_stats": [list(s) for s in self.stage_stats],
            "sd": self.sd.to_json(with_timings),
            "covering": self.covering.to_json(with_timings),
            "shortcut": self.shortcut.to_json(with_timings),
            "interior_located": self.interior_located.to_json(with_timings),
            "interior_large": self.interior_large.to_json(with_timings),
            "max_interior_thinness": self.max_interior_thinness,
            "fibers": {str(k): v for k, v in sorted(self.state.fibers().items())},
            "warnings": [str(w) for w in self.state.warnings],
        }


def build_cover(X: SimplicialComplex, base: int, radius: int,
                stage_limit: int = DEFAULT_STAGE_LIMIT,
                vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> CoverReport:
    """Run the construction out to the requested radius and re-verify the
    final ball: descent property, covering condition, shortcut property,
    location and largeness of the interior span, and interval thinness
    from the base to every interior vertex."""
    if radius < 1:
        raise ValueError("radius must be at least 1")
    if radius > stage_limit:
        raise TooLarge(f"radius {radius} above stage limit {stage_limit}")
    state = init_cover(X, base)
    stats = [(1, state.ball.vertex_count, len(state.ball.simplices(1)), 0)]
    shortcut = passed("equiv_shortcut", pairs=0, degenerate=0)
    while state.stage < radius:
        state = expand_ball(state, vertex_limit=vertex_limit)
        sc = verify_equiv_shortcut(state)
        if shortcut.passed:
            shortcut = sc
        stats.append((state.stage, state.ball.vertex_count,
                      len(state.ball.simplices(1)), len(state.last_classes)))

    ball = state.ball
    sd = check_sd_prime(ball, state.base, state.stage - 1)
    try:
        check_covering_map(state.sheet_map, ball, X, full_at=state.interior_ids())
        covering = passed("covering_condition")
    except NotACovering as exc:
        covering = failed("covering_condition",
                          {"kind": "local_isomorphism", "vertex": exc.vertex},
                          detail=exc.reason)

    interior = ball.span(state.interior_ids())
    interior_located = is_m_located(interior, 8)
    interior_large = is_locally_k_large(interior, 5)

    thin = 0
    for v in state.interior_ids():
        if v != state.base:
            t, _pair = interval_thinness(ball, state.base, v)
            thin = max(thin, t)

    return CoverReport(
        state=state,
        stage_stats=tuple(stats),
        sd=sd,
        covering=covering,
        shortcut=shortcut,
        interior_located=interior_located,
        interior_large=interior_large,
        max_interior_thinness=thin,
    )
