"""Finite-dimensional real normed spaces: symmetric polytope balls and l_p balls.

A polytope space is exact: vertices and facet normals are rational, and the
ball is ``conv(vertices) = {x : f @ x <= 1 for f in facets}``. The facet
normals of a symmetric ball are exactly the vertices of the dual ball, so
dualizing swaps the two lists. An l_p space is approximate and only ever
reaches the sampling oracles.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from ._rational import Vector, dot, neg, rank, vec
from .errors import DimensionMismatch, PreconditionError
from .verify.lp import prune_to_extreme
from .verify.vertex_enum import enumerate_vertices

logger = logging.getLogger(__name__)

EPS = 1e-9


class Space:
    """Common base; concrete spaces are frozen dataclasses."""

    dim: int
    name: str

    @property
    def exact(self) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class PolytopeSpace(Space):
    dim: int
    vertices: tuple[Vector, ...]
    facets: tuple[Vector, ...]
    name: str = field(default="polytope", compare=False)

    @property
    def exact(self) -> bool:
        return True

    def facet_vertices(self, normal: Sequence[Fraction]) -> tuple[Vector, ...]:
        return tuple(v for v in self.vertices if dot(normal, v) == 1)

    def as_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        return (np.array(self.vertices, dtype=float), np.array(self.facets, dtype=float))


@dataclass(frozen=True)
class LpSpace(Space):
    dim: int
    p: float
    name: str = field(default="lp", compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise PreconditionError("dimension must be positive")
        if not self.p >= 1:
            raise PreconditionError(f"l_p needs p >= 1, got {self.p}")

    @property
    def exact(self) -> bool:
        return False

    @property
    def conjugate(self) -> float:
        if self.p == 1:
            return math.inf
        if math.isinf(self.p):
            return 1.0
        return self.p / (self.p - 1)


def polytope(vertices: Sequence[Sequence], name: str = "polytope", *, symmetrize: bool = False) -> PolytopeSpace:
    """Build a canonical symmetric polytope space from a (possibly redundant) vertex list.

    Duplicates and non-extreme points are pruned and vertices sorted, so equal
    balls compare equal. Asymmetric input is rejected unless ``symmetrize`` is
    set, in which case the negation closure is taken with a warning.
    """
    pts = {vec(v) for v in vertices}
    if not pts:
        raise PreconditionError("empty vertex list")
    dims = {len(v) for v in pts}
    if len(dims) != 1:
        raise DimensionMismatch("vertices have differing lengths")
    n = dims.pop()
    if n < 1:
        raise PreconditionError("dimension must be positive")
    missing = {neg(v) for v in pts} - pts
    if missing:
        if not symmetrize:
            raise PreconditionError(f"vertex set is not symmetric; e.g. {_show(next(iter(sorted(missing))))} is missing")
        logger.warning("%s: completing vertex set under negation (%d points added)", name, len(missing))
        pts |= missing
    pts.discard(tuple(Fraction(0) for _ in range(n)))
    if not pts or rank(sorted(pts)) < n:
        raise PreconditionError("vertices do not span the space; the ball would have empty interior")
    verts = tuple(prune_to_extreme(sorted(pts)))
    facets = tuple(enumerate_vertices(verts))
    return PolytopeSpace(n, verts, facets, name)


def _show(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def linf(n: int) -> PolytopeSpace:
    import itertools
    return polytope(list(itertools.product((1, -1), repeat=n)), f"linf:{n}")


def l1(n: int) -> PolytopeSpace:
    pts = []
    for i in range(n):
        for s in (1, -1):
            pts.append(tuple(s if j == i else 0 for j in range(n)))
    return polytope(pts, f"l1:{n}")


def octagon() -> PolytopeSpace:
    """The octagon with vertices (+-1, 0), (0, +-1), (+-2/3, +-2/3)."""
    t = Fraction(2, 3)
    pts = [(1, 0), (-1, 0), (0, 1), (0, -1), (t, t), (t, -t), (-t, t), (-t, -t)]
    return polytope(pts, "octagon")


def lp(n: int, p: float) -> LpSpace:
    return LpSpace(n, float(p), f"lp:{n}:{p:g}")


def _check_dim(S: Space, x) -> None:
    if len(x) != S.dim:
        raise DimensionMismatch(f"vector of length {len(x)} in a space of dimension {S.dim}")


def norm(S: Space, x):
    """Minkowski gauge of ``x``; exact Fraction on polytope spaces."""
    _check_dim(S, x)
    if isinstance(S, PolytopeSpace):
        x = vec(x)
        return max(dot(f, x) for f in S.facets)
    return float(np.linalg.norm(np.asarray(x, dtype=float), ord=S.p))


def dual_norm(S: Space, f):
    """Norm of a functional: max over primal vertices of |f(v)|."""
    _check_dim(S, f)
    if isinstance(S, PolytopeSpace):
        f = vec(f)
        return max(abs(dot(f, v)) for v in S.vertices)
    return float(np.linalg.norm(np.asarray(f, dtype=float), ord=S.conjugate))


def dualize(S: Space) -> Space:
    """Space whose unit ball is the dual ball of ``S`` (the polar polytope)."""
    name = S.name[5:-1] if S.name.startswith("dual(") else f"dual({S.name})"
    if isinstance(S, PolytopeSpace):
        verts = tuple(enumerate_vertices(S.vertices))
        return PolytopeSpace(S.dim, verts, S.vertices, name)
    return LpSpace(S.dim, S.conjugate, name)


def extreme_points(S: PolytopeSpace) -> tuple[Vector, ...]:
    return S.vertices


def support_set(S: PolytopeSpace, x, mu: int = 1) -> tuple[Vector, ...]:
    """Extreme points of J_mu(x): dual-ball vertices f with f(x) = mu."""
    if mu not in (1, -1):
        raise PreconditionError("mu must be +1 or -1")
    x = vec(x)
    if norm(S, x) != 1:
        raise PreconditionError(f"{_show(x)} is not on the unit sphere")
    return tuple(f for f in S.facets if dot(f, x) == mu)


def is_smooth_point(S: Space, x) -> bool:
    if isinstance(S, PolytopeSpace):
        return len(support_set(S, x, 1)) == 1
    if abs(norm(S, x) - 1) > 1e-6:
        raise PreconditionError("point is not on the unit sphere")
    return 1 < S.p < math.inf or S.dim == 1


def is_smooth_space(S: Space) -> bool:
    if isinstance(S, PolytopeSpace):
        return S.dim == 1
    return S.dim == 1 or 1 < S.p < math.inf


def is_strictly_convex(S: Space) -> bool:
    if isinstance(S, PolytopeSpace):
        return S.dim == 1
    return S.dim == 1 or 1 < S.p < math.inf


def support_functional(S: LpSpace, x: np.ndarray) -> np.ndarray:
    """Gradient of the l_p norm at unit vectors (rows of ``x``).

    Unique for 1 < p < inf; at p = 1 this is the sign vector, one element of J(x).
    """
    x = np.atleast_2d(np.asarray(x, dtype=float))
    if S.p == 1:
        return np.sign(x)
    if math.isinf(S.p):
        out = np.zeros_like(x)
        idx = np.argmax(np.abs(x), axis=1)
        out[np.arange(len(x)), idx] = np.sign(x[np.arange(len(x)), idx])
        return out
    nrm = np.linalg.norm(x, ord=S.p, axis=1, keepdims=True)
    return np.sign(x) * (np.abs(x) / nrm) ** (S.p - 1)
