"""Tensor functionals x* (x) x on operator space and the balls they generate.

Operators are flattened row-major to vectors of length n**2; the functional
x* (x) x is the matrix G with G[i][j] = x*[i] * x[j], acting by the trace
pairing <T, G> = sum G[i][j] T[i][j] = x*(Tx). Two tensor functionals are
the same functional exactly when their G matrices agree.

The numerical-radius ball B_w = {T : |<T, G>| <= 1, G in M} has as its polar
the dual ball of (L(X), w), which is co(M); the operator-norm ball uses every
vertex/dual-vertex product instead, so its polar is co of all of them.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from ._rational import Matrix, Vector, dot, flatten, neg, rank, reshape, vec
from .errors import CertificationFailure, DegenerateSeminorm, SizeCapExceeded
from .operators import Operator, admissible_pairs
from .space import PolytopeSpace, dual_norm, dualize, norm, support_set
from .verify.lp import lp_member, prune_to_extreme
from .verify.vertex_enum import enumerate_vertices

MAX_ENUM_DIM = 3


class TensorFunctional:
    """The functional T -> xstar(T x); identity is equality of G."""

    __slots__ = ("x", "xstar", "G")

    def __init__(self, x: Sequence, xstar: Sequence):
        self.x = vec(x)
        self.xstar = vec(xstar)
        self.G: Matrix = tuple(tuple(a * b for b in self.x) for a in self.xstar)

    @classmethod
    def from_pair(cls, pair) -> "TensorFunctional":
        return cls(pair.x, pair.xstar)

    @property
    def flat(self) -> Vector:
        return flatten(self.G)

    def __call__(self, T) -> Fraction:
        entries = T.entries if isinstance(T, Operator) else T
        return sum((g * t for grow, trow in zip(self.G, entries) for g, t in zip(grow, trow)), Fraction(0))

    def __neg__(self) -> "TensorFunctional":
        return TensorFunctional(self.x, neg(self.xstar))

    def __eq__(self, other):
        if not isinstance(other, TensorFunctional):
            return NotImplemented
        return self.G == other.G

    def __hash__(self):
        return hash(self.G)

    def __repr__(self):
        return f"TensorFunctional(x={[str(v) for v in self.x]}, xstar={[str(v) for v in self.xstar]})"


def dedup_by_G(functionals) -> list:
    """One representative per distinct G (first seen), sorted by G."""
    seen = {}
    for tf in functionals:
        seen.setdefault(tf.G, tf)
    return [seen[g] for g in sorted(seen)]


@lru_cache(maxsize=64)
def build_M(S: PolytopeSpace) -> tuple[TensorFunctional, ...]:
    """x* (x) x over admissible pairs, deduplicated; closed under negation."""
    return tuple(dedup_by_G(TensorFunctional.from_pair(p) for p in admissible_pairs(S)))


@lru_cache(maxsize=64)
def build_A(S: PolytopeSpace) -> tuple[TensorFunctional, ...]:
    """Norm-attaining products |x*(x)| = ||x*|| ||x|| with both factors extreme.

    Only the extreme representatives are needed: every other norm-attaining
    product is a convex combination of these, so the hulls coincide.
    """
    D = dualize(S)
    out = []
    for v in S.vertices:
        nv = norm(S, v)
        for f in D.vertices:
            if abs(dot(f, v)) == nv * dual_norm(S, f):
                out.append(TensorFunctional(v, f))
    return tuple(dedup_by_G(out))


def _with_negatives(gens: Sequence[Vector]) -> list[Vector]:
    s = set(gens)
    s.update(neg(g) for g in gens)
    return sorted(s)


@dataclass(eq=False)
class OperatorBallPolytope:
    """Symmetric polytope {T : |<T, G>| <= 1 for G in generators} in R^(n*n)."""

    n: int
    generators: tuple[Vector, ...]
    allow_big: bool = False

    @property
    def ambient_dim(self) -> int:
        return self.n * self.n

    @cached_property
    def normals(self) -> tuple[Vector, ...]:
        return tuple(_with_negatives(self.generators))

    def contains(self, T) -> bool:
        t = flatten(T.entries) if isinstance(T, Operator) else vec(T)
        return lp_member(t, normals=self.normals)

    @cached_property
    def vertices(self) -> tuple[Vector, ...]:
        if self.n > MAX_ENUM_DIM and not self.allow_big:
            raise SizeCapExceeded(f"vertex enumeration in dimension {self.ambient_dim} needs allow_big")
        return tuple(enumerate_vertices(self.normals))

    def vertex_operators(self, S: PolytopeSpace) -> list[Operator]:
        return [Operator(S, reshape(v, self.n)) for v in self.vertices]

    @cached_property
    def polar_vertices(self) -> tuple[Vector, ...]:
        """Vertices of the polar, co(+-generators), by LP pruning."""
        return tuple(prune_to_extreme(self.normals))

    @cached_property
    def polar_vertices_dd(self) -> tuple[Vector, ...]:
        """Vertices of the polar, by double description from this ball's vertices."""
        return tuple(enumerate_vertices(self.vertices))


def _span_check(S: PolytopeSpace, gens: Sequence[Vector]) -> None:
    if rank(gens) < S.dim ** 2:
        from .index import kernel_witness
        raise DegenerateSeminorm("w is only a seminorm on this space", kernel_witness(S))


@lru_cache(maxsize=64)
def w_ball(S: PolytopeSpace, allow_big: bool = False) -> OperatorBallPolytope:
    gens = tuple(tf.flat for tf in build_M(S))
    _span_check(S, gens)
    return OperatorBallPolytope(S.dim, gens, allow_big)


@lru_cache(maxsize=64)
def op_ball(S: PolytopeSpace, allow_big: bool = False) -> OperatorBallPolytope:
    """|x*(Tv)| <= 1 for all vertex/dual-vertex pairs, i.e. ||Tv|| <= 1 at every vertex."""
    gens = sorted({TensorFunctional(v, f).flat for v in S.vertices for f in S.facets})
    return OperatorBallPolytope(S.dim, tuple(gens), allow_big)


def extreme_dual_w(S: PolytopeSpace, allow_big: bool = False) -> tuple[TensorFunctional, ...]:
    """Extreme points of the dual ball of (L(X), w), certified.

    The candidate set is build_M. The certificate enumerates the vertices of
    B_w, builds the polar's H-rep from them and enumerates again; the result
    must equal the G-set of build_M exactly.
    """
    M = build_M(S)
    polar = set(w_ball(S, allow_big).polar_vertices_dd)
    gs = {tf.flat for tf in M}
    diff = polar ^ gs
    if diff:
        raise CertificationFailure(f"{S.name}: polar vertex set differs from M in {len(diff)} elements", sorted(diff))
    return M


@dataclass(frozen=True)
class CountReport:
    pair_count: int
    formula_value: int
    distinct_count: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.formula_value, self.distinct_count)


def count_extremes(S: PolytopeSpace, allow_big: bool = False) -> CountReport:
    """Three independent counts of extreme functionals.

    formula_value is 2 * sum over vertices x of |E_J(x)|; pair_count counts
    admissible (x, x*, sigma) triples directly; distinct_count is the number
    of distinct certified extreme functionals. On symmetric spaces the first
    two double-count: x* (x) x and (-x*) (x) (-x) are the same functional.
    """
    formula = 2 * sum(len(support_set(S, v, 1)) for v in S.vertices)
    return CountReport(len(admissible_pairs(S)), formula, len(extreme_dual_w(S, allow_big)))


@dataclass(frozen=True)
class HullReport:
    w_dual_eq: bool
    op_dual_eq: bool


def _same_polytope(verts_a: Sequence[Vector], verts_b: Sequence[Vector]) -> bool:
    return all(lp_member(v, vertices=verts_b) for v in verts_a) and all(lp_member(v, vertices=verts_a) for v in verts_b)


def verify_hull_equality(S: PolytopeSpace, allow_big: bool = False) -> HullReport:
    """Compare co(+-M) with the polars of B_w and of the operator-norm ball.

    The first equality always holds; the second holds exactly when n(X) = 1.
    """
    M = _with_negatives([tf.flat for tf in build_M(S)])
    wb = w_ball(S, allow_big)
    w_eq = _same_polytope(wb.polar_vertices_dd, M)
    ob = op_ball(S, allow_big)
    op_eq = _same_polytope(ob.polar_vertices, M)
    return HullReport(w_eq, op_eq)


def dual_norm_sandwich(S: PolytopeSpace, allow_big: bool = False) -> list[tuple[Vector, bool]]:
    """Membership of every polar(B_w) vertex in polar(operator-norm ball)."""
    target = op_ball(S, allow_big).polar_vertices
    return [(v, lp_member(v, vertices=target)) for v in w_ball(S, allow_big).polar_vertices_dd]
