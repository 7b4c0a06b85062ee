"""Radius attainment, Birkhoff-James orthogonality for w, nu-smoothness, exposedness.

Attainment is stored on extreme pairs only: any pair (x, x*) attaining w(T)
gives a value that is a convex combination of values on extreme attaining
pairs, so the hull of attainment values (all the orthogonality test needs) is
unchanged.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._rational import Vector, dot, flatten, neg, rank, vec
from .errors import NotExtremeError, PreconditionError, ZeroRadius
from .operators import Operator, admissible_pairs, numerical_radius
from .space import PolytopeSpace, dual_norm, norm
from .tensor import TensorFunctional, extreme_dual_w
from .verify.lp import convex_combination, max_margin_direction


@dataclass(frozen=True)
class AttainmentPair:
    x: Vector
    xstar: Vector
    sign: int  # x*(Tx) / w(T)


@dataclass(frozen=True)
class AttainmentSet:
    radius: Fraction
    pairs: tuple[AttainmentPair, ...]


def _require_exact(T: Operator) -> PolytopeSpace:
    if not T.exact or not isinstance(T.space, PolytopeSpace):
        raise PreconditionError("needs an exact operator on a polytope space")
    return T.space


def attainment_set(T: Operator) -> AttainmentSet:
    """Extreme pairs with x*(x) = 1 and |x*(Tx)| = w(T), tagged with the sign."""
    S = _require_exact(T)
    w = numerical_radius(T)
    if w == 0:
        raise ZeroRadius("w(T) = 0")
    out = []
    for p in admissible_pairs(S):
        if p.sigma != 1:
            continue
        val = dot(p.xstar, T(p.x))
        if abs(val) == w:
            out.append(AttainmentPair(p.x, p.xstar, 1 if val > 0 else -1))
    return AttainmentSet(w, tuple(out))


@dataclass(frozen=True)
class BJResult:
    orthogonal: bool
    # orthogonal: list of (pair, weight) with weights summing to 1
    coefficients: tuple[tuple[AttainmentPair, Fraction], ...] = ()
    # not orthogonal: lam with w(T + sum lam_i A_i) < w(T)
    lam: tuple[Fraction, ...] = ()
    perturbed_radius: Fraction | None = None


def _combo(T: Operator, W: Sequence[Operator], lam: Sequence[Fraction]) -> Operator:
    out = T
    for c, A in zip(lam, W):
        out = out + A.scale(c)
    return out


def bj_orthogonal_w(T: Operator, W: Sequence[Operator], max_halvings: int = 200) -> BJResult:
    """Is w(T + A) >= w(T) for every A in span(W)?

    Orthogonal iff 0 lies in the convex hull of the attainment vectors
    s * (x*(A_1 x), ..., x*(A_k x)). A positive answer carries convex weights
    (at most k + 1 nonzero); a negative one carries an exactly verified
    decreasing perturbation.
    """
    if not W:
        raise PreconditionError("W must contain at least one operator")
    S = _require_exact(T)
    for A in W:
        if A.space != S or not A.exact:
            raise PreconditionError("W must hold exact operators on the same space")
    att = attainment_set(T)
    vectors = [tuple(p.sign * dot(p.xstar, A(p.x)) for A in W) for p in att.pairs]
    weights = convex_combination([0] * len(W), vectors)
    if weights is not None:
        coeffs = tuple((p, c) for p, c in zip(att.pairs, weights) if c != 0)
        return BJResult(True, coeffs)
    margin, d = max_margin_direction(vectors)
    if margin <= 0:
        raise RuntimeError("membership and separation LPs disagree")
    t = Fraction(1)
    for _ in range(max_halvings):
        lam = tuple(-t * di for di in d)
        r = numerical_radius(_combo(T, W, lam))
        if r < att.radius:
            return BJResult(False, lam=lam, perturbed_radius=r)
        t /= 2
    raise RuntimeError("no decreasing step found")


def rank_one_spear(S, x: Sequence, xstar: Sequence, mu: int = 1) -> Operator:
    """The operator y -> x*(y) x (real scalars, so the two conjugated mu's cancel)."""
    if mu not in (1, -1):
        raise PreconditionError("mu must be +1 or -1")
    if isinstance(S, PolytopeSpace):
        x, xstar = vec(x), vec(xstar)
        if norm(S, x) != 1 or dual_norm(S, xstar) != 1:
            raise PreconditionError("x and x* must have norm one")
        if dot(xstar, x) != mu:
            raise PreconditionError("x*(x) must equal mu")
        return Operator(S, [[a * b for b in xstar] for a in x])
    import numpy as np

    x, xstar = np.asarray(x, dtype=float), np.asarray(xstar, dtype=float)
    if abs(norm(S, x) - 1) > 1e-9 or abs(dual_norm(S, xstar) - 1) > 1e-9 or abs(xstar @ x - mu) > 1e-9:
        raise PreconditionError("need unit x, unit x* and x*(x) = mu")
    return Operator(S, np.outer(x, xstar))


def _affine_dim(points: Sequence[Vector]) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    return rank([tuple(a - b for a, b in zip(p, base)) for p in points[1:]])


def exposed_face(T: Operator) -> list[Vector]:
    """Vertices of the face of co(+-M) on which <T, .> is maximal."""
    _require_exact(T)
    att = attainment_set(T)
    gs = {flatten(TensorFunctional(p.x, p.xstar).G) for p in att.pairs if p.sign == 1}
    gs |= {neg(flatten(TensorFunctional(p.x, p.xstar).G)) for p in att.pairs if p.sign == -1}
    return sorted(gs)


def nu_smooth(T: Operator) -> bool:
    """True iff the face of the w-dual ball exposed by T is a single point."""
    return _affine_dim(exposed_face(T)) == 0


def _as_flat(tf) -> Vector:
    if isinstance(tf, TensorFunctional):
        return tf.flat
    if tf and isinstance(tf[0], (list, tuple)):
        return flatten(vec(r) for r in tf)
    return vec(tf)


def exposing_operator(S: PolytopeSpace, tf, allow_big: bool = False):
    """LP: maximize t s.t. <H, G - G'> >= t for all other extreme G', |H_ij| <= 1.

    Returns (t, H). Raises NotExtremeError when ``tf`` is not an extreme
    functional of the w-dual ball.
    """
    g = _as_flat(tf)
    ext = [e.flat for e in extreme_dual_w(S, allow_big)]
    if g not in ext:
        raise NotExtremeError("functional is not an extreme point of the w-dual ball")
    diffs = [tuple(a - b for a, b in zip(g, o)) for o in ext if o != g]
    t, h = max_margin_direction(diffs)
    return t, h


def exposed_point_check(S: PolytopeSpace, tf, allow_big: bool = False) -> bool:
    t, _ = exposing_operator(S, tf, allow_big)
    return t > 0
