"""Sampling oracles over deterministic meshes of the unit sphere.

Meshes are nested in ``density`` (the mesh at density d is contained in the
mesh at d + 1), which is what makes the sampled suprema monotone.

- Polytope spaces: every facet is covered by a barycentric lattice over its
  vertex list with step 2**-(density // 2); every mesh point is paired with
  all dual vertices that support it (x*(x) >= 1 - eps).
- l_p spaces: an angular grid for n = 2, 3 and a golden-ratio (R_d) sequence
  prefix for n > 3, pushed radially onto the sphere; the support functional
  is the norm gradient.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np
from scipy.optimize import minimize
from scipy.stats import norm as _gauss

from ..space import EPS, LpSpace, PolytopeSpace, Space, support_functional

DEFAULT_DENSITY = 8


def _compositions(total: int, parts: int) -> np.ndarray:
    rows = []
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        row = []
        for b in bars:
            row.append(b - prev - 1)
            prev = b
        row.append(total + parts - 1 - prev - 1)
        rows.append(row)
    return np.array(rows, dtype=float) / total


def _direction_mesh(n: int, density: int) -> np.ndarray:
    if n == 1:
        return np.array([[1.0], [-1.0]])
    if n == 2:
        k = 2 ** (density + 2)
        t = 2 * np.pi * np.arange(k) / k
        return np.column_stack([np.cos(t), np.sin(t)])
    if n == 3:
        k = 2 ** (density // 2 + 2)
        theta = np.pi * np.arange(k + 1) / k
        phi = 2 * np.pi * np.arange(2 * k) / (2 * k)
        th, ph = np.meshgrid(theta, phi, indexing="ij")
        pts = np.column_stack([
            (np.sin(th) * np.cos(ph)).ravel(),
            (np.sin(th) * np.sin(ph)).ravel(),
            np.cos(th).ravel(),
        ])
        return np.unique(np.round(pts, 15), axis=0)
    m = 2 ** (density + 4)
    # R_d low-discrepancy sequence, golden-ratio generalization
    phi_d = 2.0
    for _ in range(64):
        phi_d = (1 + phi_d) ** (1.0 / (n + 1))
    alpha = (1.0 / phi_d) ** np.arange(1, n + 1)
    u = (0.5 + np.outer(np.arange(1, m + 1), alpha)) % 1.0
    g = _gauss.ppf(np.clip(u, 1e-12, 1 - 1e-12))
    return g / np.linalg.norm(g, axis=1, keepdims=True)


@lru_cache(maxsize=64)
def _polytope_mesh(S: PolytopeSpace, density: int, eps: float) -> tuple[np.ndarray, np.ndarray]:
    step = 2 ** (density // 2)
    pts = []
    for f in S.facets:
        fv = np.array(S.facet_vertices(f), dtype=float)
        w = _compositions(step, len(fv))
        pts.append(w @ fv)
    pts = np.unique(np.round(np.vstack(pts), 14), axis=0)
    F = np.array(S.facets, dtype=float)
    support = (pts @ F.T) >= 1 - eps
    return pts, support


def sphere_mesh(S: Space, density: int = DEFAULT_DENSITY, eps: float = EPS):
    """Return (points, functionals, mask).

    For polytopes ``functionals`` is the dual vertex array and ``mask[i, k]``
    says that functional k supports point i. For l_p spaces ``functionals``
    holds one gradient row per point and ``mask`` is None.
    """
    if isinstance(S, PolytopeSpace):
        pts, mask = _polytope_mesh(S, density, eps)
        return pts, np.array(S.facets, dtype=float), mask
    u = _direction_mesh(S.dim, density)
    x = u / np.linalg.norm(u, ord=S.p, axis=1, keepdims=True)
    return x, support_functional(S, x), None


def _values(S: Space, T: np.ndarray, density: int, eps: float = EPS):
    pts, funcs, mask = sphere_mesh(S, density, eps)
    Tx = pts @ T.T
    if mask is None:
        return pts, np.einsum("ij,ij->i", funcs, Tx)
    vals = Tx @ funcs.T  # [point, functional]
    return pts, np.where(mask, vals, np.nan)


def sample_radius(S: Space, T, density: int = DEFAULT_DENSITY, eps: float = EPS) -> float:
    """Mesh supremum of |x*(Tx)| over unit x and supporting x*."""
    T = np.asarray(T, dtype=float)
    _, vals = _values(S, T, density, eps)
    return float(np.nanmax(np.abs(vals)))


def sampled_attainment(S: Space, T, density: int = DEFAULT_DENSITY, tol: float = 1e-6):
    """Mesh points whose best support value is within ``tol`` of the sampled radius."""
    T = np.asarray(T, dtype=float)
    pts, vals = _values(S, T, density)
    best = np.nanmax(np.abs(vals.reshape(len(pts), -1)), axis=1)
    top = best.max()
    return pts[best >= top - tol], float(top)


def sample_op_norm(S: Space, T, density: int = DEFAULT_DENSITY) -> float:
    T = np.asarray(T, dtype=float)
    pts, _, _ = sphere_mesh(S, density)
    return float(np.max(_norm_rows(S, pts @ T.T)))


def _norm_rows(S: Space, y: np.ndarray) -> np.ndarray:
    if isinstance(S, PolytopeSpace):
        return np.max(y @ np.array(S.facets, dtype=float).T, axis=1)
    return np.linalg.norm(y, ord=S.p, axis=1)


def _refine(S: LpSpace, objective, start: np.ndarray) -> float:
    def f(z):
        nz = np.linalg.norm(z, ord=S.p)
        if nz == 0:
            return 0.0
        return -objective(z / nz)

    res = minimize(f, start, method="Nelder-Mead", options={"xatol": 1e-12, "fatol": 1e-14, "maxiter": 4000})
    return -float(res.fun)


def refined_radius(S: LpSpace, T, density: int = DEFAULT_DENSITY, starts: int = 4) -> tuple[float, int]:
    """Mesh supremum plus Nelder-Mead polishing from the best mesh points.

    Returns (value, mesh size).
    """
    T = np.asarray(T, dtype=float)
    pts, vals = _values(S, T, density)
    a = np.abs(vals)
    best = float(a.max())

    def obj(x):
        return abs(float(support_functional(S, x)[0] @ (T @ x)))

    for i in np.argsort(-a)[:starts]:
        best = max(best, _refine(S, obj, pts[i]))
    return best, len(pts)


def refined_op_norm(S: LpSpace, T, density: int = DEFAULT_DENSITY, starts: int = 4) -> tuple[float, int]:
    T = np.asarray(T, dtype=float)
    pts, _, _ = sphere_mesh(S, density)
    a = _norm_rows(S, pts @ T.T)
    best = float(a.max())
    for i in np.argsort(-a)[:starts]:
        best = max(best, _refine(S, lambda x: float(np.linalg.norm(T @ x, ord=S.p)), pts[i]))
    return best, len(pts)
