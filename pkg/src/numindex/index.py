"""Numerical index n(X) = inf{ w(T) : ||T|| = 1 }.

For a polytope space both w and the operator norm are polyhedral, so

    n(X) = 1 / max{ ||V|| : V a vertex of B_w },

since the inverse ratio ||T|| / w(T) is maximized over B_w at a vertex. That
gives an exact rational. The search routine is an independent float upper
bound that works on any space.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from ._rational import dot, nullspace, rank, reshape
from .errors import DegenerateSeminorm, PreconditionError
from .operators import Operator, pair_arrays, identity, op_norm, random_rational_operator
from .space import PolytopeSpace, Space
from .tensor import build_M, w_ball
from .verify import sampling

DEFAULT_RESTARTS = 64
SEARCH_DENSITY = 6


def kernel_witness(S: PolytopeSpace) -> Operator | None:
    """A nonzero operator with w(T) = 0, or None when w is a norm."""
    gens = [tf.flat for tf in build_M(S)]
    basis = nullspace(gens, S.dim ** 2)
    if not basis:
        return None
    return Operator(S, reshape(basis[0], S.dim))


def is_w_norm(S: PolytopeSpace) -> bool:
    """True iff the M-functionals span operator space, i.e. w(T) = 0 forces T = 0."""
    return rank([tf.flat for tf in build_M(S)]) == S.dim ** 2


@dataclass(frozen=True)
class McGregorResult:
    index_one: bool
    witness: tuple | None = None  # (x, x*, x*(x))


def mcgregor(S: PolytopeSpace) -> McGregorResult:
    """n(X) = 1 iff |x*(x)| = 1 for every vertex x and dual vertex x*."""
    worst = None
    for v in S.vertices:
        for f in S.facets:
            val = dot(f, v)
            if abs(val) != 1 and (worst is None or abs(val) < abs(worst[2])):
                worst = (v, f, val)
    return McGregorResult(worst is None, worst)


@dataclass(frozen=True)
class IndexResult:
    value: Fraction
    witness: Operator | None
    degenerate: bool = False


def numerical_index_exact(S: PolytopeSpace, allow_big: bool = False) -> IndexResult:
    """Exact n(X) with the B_w vertex realizing it (w = 1, ||V|| = 1/n(X)).

    A degenerate seminorm reports 0 with a kernel operator as witness.
    """
    try:
        ball = w_ball(S, allow_big)
    except DegenerateSeminorm as exc:
        return IndexResult(Fraction(0), exc.witness, degenerate=True)
    best, arg = None, None
    for V in ball.vertex_operators(S):
        nv = op_norm(V)
        if best is None or nv > best:
            best, arg = nv, V
    return IndexResult(1 / best, arg)


@dataclass
class SearchResult:
    upper_bound: float
    argmin_operator: np.ndarray
    restarts: int
    seed: int
    history: list[float] = field(default_factory=list, repr=False)


def _objectives(S: Space, density: int) -> tuple[Callable, Callable]:
    if isinstance(S, PolytopeSpace):
        X, Xs = pair_arrays(S)
        V, F = S.as_arrays()

        def w(T):
            return np.max(np.abs(np.einsum("ki,ij,kj->k", Xs, T, X)))

        def nrm(T):
            return np.max(V @ T.T @ F.T)

        return w, nrm
    pts, funcs, _ = sampling.sphere_mesh(S, density)

    def w(T):
        return np.max(np.abs(np.einsum("ij,ij->i", funcs, pts @ T.T)))

    def nrm(T):
        return np.max(np.linalg.norm(pts @ T.T, ord=S.p, axis=1))

    return w, nrm


def _pattern_search(f, x0, rng, *, step=0.5, tol=1e-11, extra_dirs=None, max_evals=200_000):
    """Derivative-free descent on a nonsmooth function.

    Polls the coordinate directions, then a fresh random orthonormal frame;
    accepts the first improving move, doubles the step on success and halves
    it on a failed poll.
    """
    x = np.array(x0, dtype=float)
    fx = f(x)
    d = len(x)
    extra_dirs = d if extra_dirs is None else extra_dirs
    h = step
    evals = 1
    eye = np.eye(d)
    while h > tol and evals < max_evals:
        q, _ = np.linalg.qr(rng.standard_normal((d, d)))
        dirs = np.vstack([eye, -eye, q.T[:extra_dirs], -q.T[:extra_dirs]])
        moved = False
        for u in dirs:
            y = x + h * u
            fy = f(y)
            evals += 1
            if fy < fx:
                x, fx = y / np.linalg.norm(y), fy
                moved = True
                break
        h = min(2 * h, 1.0) if moved else h / 2
    return x, fx


def numerical_index_search(S: Space, budget: int = DEFAULT_RESTARTS, seed: int = 0, density: int = SEARCH_DENSITY) -> SearchResult:
    """Random-restart search for min w(T)/||T||; an upper bound on n(X), never exact.

    On l_p spaces both w and the norm are mesh-sampled; on polytope spaces
    they are evaluated in floating point over vertices and admissible pairs.
    """
    if budget < 1:
        raise PreconditionError("budget must be at least 1")
    n = S.dim
    w, nrm = _objectives(S, density)

    def ratio(t):
        T = t.reshape(n, n)
        d = nrm(T)
        return w(T) / d if d > 0 else math.inf

    rng = np.random.default_rng(seed)
    best, arg = math.inf, None
    history = []
    for _ in range(budget):
        t0 = rng.standard_normal(n * n)
        t0 /= np.linalg.norm(t0)
        t, ft = _pattern_search(ratio, t0, rng)
        history.append(float(ft))
        if ft < best:
            best, arg = float(ft), t.reshape(n, n)
    arg = arg / nrm(arg)
    return SearchResult(best, arg, budget, seed, history)


@dataclass(frozen=True)
class SpearResult:
    holds: bool
    trials: int
    witness: Operator | None = None


def spear_check_identity(S: PolytopeSpace, trials: int = 200, seed: int = 0) -> SpearResult:
    """Test max over t = +-1 of ||Id + tA|| = 1 + ||A|| on random rational A, exactly.

    Holds for every A iff n(X) = 1, so one failing A settles the negative case.
    """
    I = identity(S)
    rng = np.random.default_rng(seed)
    for k in range(trials):
        A = random_rational_operator(S, rng)
        lhs = max(op_norm(I + A), op_norm(I - A))
        if lhs != 1 + op_norm(A):
            return SpearResult(False, k + 1, A)
    return SpearResult(True, trials)
