"""Operators on a space: operator norm, numerical range and numerical radius.

On polytope spaces everything is exact. The radius is a maximum over the
finite set of admissible pairs (v, x*, sigma): v a vertex of the ball, x* a
vertex of the dual ball, x*(v) = sigma = +-1. Two reductions make this exact:
for fixed x the support set J(x) is a face of the dual ball, so the sup over
it is reached at its vertices (which are dual-ball vertices); and for fixed
x* the map x -> x*(Tx) is linear on the facet {x*(x) = 1}, so its sup is
reached at a vertex of that facet.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import numpy as np

from ._rational import Vector, dot, is_exact_scalar, mat, matvec
from .errors import DimensionMismatch, PreconditionError
from .space import EPS, PolytopeSpace, Space, norm
from .verify import sampling


@dataclass(frozen=True, eq=False)
class Operator:
    """A square matrix acting on ``space``.

    Entries are stored as Fractions when the space is a polytope space and
    every entry is an exact scalar; any float entry (or an l_p space) puts
    the operator on the sampled path, stored as a float ndarray.
    """

    space: Space
    entries: object

    def __post_init__(self):
        rows = self.entries
        if isinstance(rows, Operator):
            rows = rows.entries
        if isinstance(rows, np.ndarray):
            rows = rows.tolist()
        rows = [list(r) for r in rows]
        n = self.space.dim
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DimensionMismatch(f"expected a {n}x{n} matrix")
        if self.space.exact and all(is_exact_scalar(v) for r in rows for v in r):
            object.__setattr__(self, "entries", mat(rows))
        else:
            arr = np.array([[float(Fraction(v)) if isinstance(v, str) else float(v) for v in r] for r in rows])
            arr.setflags(write=False)
            object.__setattr__(self, "entries", arr)

    @property
    def exact(self) -> bool:
        return isinstance(self.entries, tuple)

    @property
    def n(self) -> int:
        return self.space.dim

    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=float)

    def __call__(self, x):
        if self.exact:
            return matvec(self.entries, x)
        return self.entries @ np.asarray(x, dtype=float)

    def __add__(self, other: "Operator") -> "Operator":
        return Operator(self.space, _combine(self, other, 1))

    def __sub__(self, other: "Operator") -> "Operator":
        return Operator(self.space, _combine(self, other, -1))

    def scale(self, c) -> "Operator":
        if self.exact and is_exact_scalar(c):
            c = Fraction(c)
            return Operator(self.space, [[c * v for v in r] for r in self.entries])
        return Operator(self.space, float(c) * self.to_array())

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return self.space == other.space and np.array_equal(np.array(self.entries, dtype=object), np.array(other.entries, dtype=object))

    def __hash__(self):
        return hash((self.space, tuple(map(tuple, np.array(self.entries, dtype=object).tolist()))))


def _combine(a: Operator, b: Operator, sign: int):
    if a.space != b.space:
        raise DimensionMismatch("operators act on different spaces")
    if a.exact and b.exact:
        return [[x + sign * y for x, y in zip(r, s)] for r, s in zip(a.entries, b.entries)]
    return a.to_array() + sign * b.to_array()


def identity(S: Space) -> Operator:
    return Operator(S, [[int(i == j) for j in range(S.dim)] for i in range(S.dim)])


def zero(S: Space) -> Operator:
    return Operator(S, [[0] * S.dim for _ in range(S.dim)])


@dataclass(frozen=True)
class AdmissiblePair:
    x: Vector
    xstar: Vector
    sigma: int


@dataclass(frozen=True)
class RangeReport:
    facet_intervals: tuple[tuple[Vector, tuple[Fraction, Fraction]], ...]
    hull: tuple[Fraction, Fraction]
    radius: Fraction


@lru_cache(maxsize=128)
def admissible_pairs(S: PolytopeSpace) -> tuple[AdmissiblePair, ...]:
    """All (v, x*, sigma) with v, x* extreme and x*(v) = sigma in {-1, +1}."""
    out = []
    for v in S.vertices:
        for f in S.facets:
            val = dot(f, v)
            if val == 1 or val == -1:
                out.append(AdmissiblePair(v, f, int(val)))
    return tuple(out)


def pair_arrays(S: PolytopeSpace) -> tuple[np.ndarray, np.ndarray]:
    pairs = admissible_pairs(S)
    return (np.array([p.x for p in pairs], dtype=float), np.array([p.xstar for p in pairs], dtype=float))


def op_norm(T: Operator, density: int = sampling.DEFAULT_DENSITY):
    """Operator norm; exact on polytope spaces, sampled (mesh + polish) otherwise."""
    S = T.space
    if T.exact:
        return max(norm(S, T(v)) for v in S.vertices)
    if isinstance(S, PolytopeSpace):
        return sampling.sample_op_norm(S, T.to_array(), density)
    return sampling.refined_op_norm(S, T.to_array(), density)[0]


def numerical_radius(T: Operator, density: int = sampling.DEFAULT_DENSITY, eps: float = EPS):
    """Numerical radius w(T).

    Exact on polytope spaces with rational entries: max |x*(Tv)| over
    admissible pairs. Float operators go to the sampling oracle (polished by
    Nelder-Mead on l_p spaces).
    """
    S = T.space
    if T.exact:
        return max(abs(dot(p.xstar, T(p.x))) for p in admissible_pairs(S))
    if isinstance(S, PolytopeSpace):
        return sampling.sample_radius(S, T.to_array(), density, eps)
    return sampling.refined_radius(S, T.to_array(), density)[0]


def numerical_range(T: Operator) -> RangeReport:
    """Per-facet intervals of x -> x*(Tx) on F(x*) = {x in B : x*(x) = 1}."""
    S = T.space
    if not isinstance(S, PolytopeSpace) or not T.exact:
        raise PreconditionError("numerical_range needs an exact operator on a polytope space")
    intervals = []
    for f in S.facets:
        vals = [dot(f, T(v)) for v in S.facet_vertices(f)]
        intervals.append((f, (min(vals), max(vals))))
    lo = min(iv[0] for _, iv in intervals)
    hi = max(iv[1] for _, iv in intervals)
    return RangeReport(tuple(intervals), (lo, hi), max(abs(lo), abs(hi)))


def random_rational_operator(S: Space, rng, bound: int = 4, max_den: int = 3) -> Operator:
    """Operator with entries p/q, |p| <= bound, 1 <= q <= max_den."""
    n = S.dim
    rows = [[Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, max_den + 1))) for _ in range(n)] for _ in range(n)]
    return Operator(S, rows)


def as_matrix_list(T: Operator) -> list[list]:
    return [list(r) for r in T.entries] if T.exact else T.to_array().tolist()
