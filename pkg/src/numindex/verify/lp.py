"""Exact rational linear programming.

Dense two-phase tableau simplex over ``Fraction`` with Bland's rule, so it
terminates on degenerate problems. The problem sizes in this package are
tiny (a few dozen rows), which is what makes exact arithmetic affordable.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .._rational import Vector, to_fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: Vector | None = None
    value: Fraction | None = None

    @property
    def feasible(self) -> bool:
        return self.status != INFEASIBLE


def _pivot(tab, basis, r, c):
    row = tab[r]
    inv = 1 / row[c]
    if inv != 1:
        row = [v * inv for v in row]
        tab[r] = row
    nz = [(j, v) for j, v in enumerate(row) if v != 0]
    for i, other in enumerate(tab):
        if i == r:
            continue
        f = other[c]
        if f != 0:
            for j, v in nz:
                other[j] -= f * v
    basis[r] = c


def _run(tab, basis, cost, allowed):
    """Maximize cost over the tableau; last column is the rhs.

    Returns False on unboundedness. ``allowed`` masks columns that may enter.
    """
    ncols = len(tab[0]) - 1
    while True:
        z = [
            sum((cost[basis[i]] * tab[i][j] for i in range(len(tab)) if cost[basis[i]] != 0), Fraction(0)) - cost[j]
            for j in range(ncols)
        ]
        enter = next((j for j in range(ncols) if allowed[j] and z[j] < 0), None)
        if enter is None:
            return True
        best = None
        for i, row in enumerate(tab):
            a = row[enter]
            if a > 0:
                key = (row[-1] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return False
        _pivot(tab, basis, best[1], enter)


def linprog(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
) -> LPResult:
    """Maximize ``c @ x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``x >= 0``."""
    n = len(c)
    cost = [to_fraction(v) for v in c]
    rows = []  # (coefficients, rhs, slack sign or 0)
    for a, b in zip(A_ub, b_ub):
        rows.append(([to_fraction(v) for v in a], to_fraction(b), 1))
    for a, b in zip(A_eq, b_eq):
        rows.append(([to_fraction(v) for v in a], to_fraction(b), 0))
    if any(len(a) != n for a, _, _ in rows):
        raise ValueError("constraint width does not match objective")

    m = len(rows)
    n_slack = sum(1 for _, _, s in rows if s)
    # columns: x | slacks | artificials | rhs
    tab: list[list[Fraction]] = []
    basis: list[int] = []
    art_cols: list[int] = []
    slack_idx = n
    needs_art = []
    for a, b, s in rows:
        flip = b < 0
        needs_art.append(flip or not s)
    n_art = sum(needs_art)
    width = n + n_slack + n_art
    art_next = n + n_slack
    for (a, b, s), art in zip(rows, needs_art):
        row = a + [Fraction(0)] * (n_slack + n_art) + [b]
        if s:
            row[slack_idx] = Fraction(1)
            slack_col = slack_idx
            slack_idx += 1
        if b < 0:
            row = [-v for v in row]
        if art:
            row[art_next] = Fraction(1)
            basis.append(art_next)
            art_cols.append(art_next)
            art_next += 1
        else:
            basis.append(slack_col)
        tab.append(row)

    if art_cols:
        phase1 = [Fraction(0)] * width
        for j in art_cols:
            phase1[j] = Fraction(-1)
        _run(tab, basis, phase1, [True] * width)
        infeas = sum((tab[i][-1] for i in range(m) if basis[i] in art_cols), Fraction(0))
        if infeas != 0:
            return LPResult(INFEASIBLE)
        art_set = set(art_cols)
        i = 0
        while i < len(tab):
            if basis[i] in art_set:
                col = next((j for j in range(n + n_slack) if tab[i][j] != 0), None)
                if col is None:
                    del tab[i]
                    del basis[i]
                    continue
                _pivot(tab, basis, i, col)
            i += 1
    allowed = [j < n + n_slack for j in range(width)]
    full_cost = cost + [Fraction(0)] * (n_slack + n_art)
    if not _run(tab, basis, full_cost, allowed):
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * width
    for i, bcol in enumerate(basis):
        x[bcol] = tab[i][-1]
    sol = tuple(x[:n])
    return LPResult(OPTIMAL, sol, sum((a * b for a, b in zip(cost, sol)), Fraction(0)))


def convex_combination(point: Sequence, points: Sequence[Sequence]) -> Vector | None:
    """Convex weights expressing ``point`` over ``points``, or None.

    The weights come from a basic solution, so at most ``dim + 1`` are nonzero.
    """
    point = [to_fraction(v) for v in point]
    if not points:
        return None
    d = len(point)
    A_eq = [[to_fraction(p[i]) for p in points] for i in range(d)]
    A_eq.append([Fraction(1)] * len(points))
    res = linprog([0] * len(points), A_eq=A_eq, b_eq=point + [Fraction(1)])
    return res.x if res.status == OPTIMAL else None


def lp_member(point: Sequence, *, vertices: Sequence[Sequence] | None = None,
              normals: Sequence[Sequence] | None = None, offsets: Sequence | None = None) -> bool:
    """Exact membership of ``point`` in a polytope given by V-rep or H-rep.

    H-rep is ``normals @ x <= offsets`` (offsets default to 1).
    """
    if (vertices is None) == (normals is None):
        raise ValueError("give exactly one of vertices= or normals=")
    if vertices is not None:
        if vertices and len(vertices[0]) != len(point):
            raise ValueError("dimension mismatch")
        return convex_combination(point, vertices) is not None
    p = [to_fraction(v) for v in point]
    if offsets is None:
        offsets = [1] * len(normals)
    for a, b in zip(normals, offsets):
        if len(a) != len(p):
            raise ValueError("dimension mismatch")
        if sum((to_fraction(x) * y for x, y in zip(a, p)), Fraction(0)) > to_fraction(b):
            return False
    return True


def prune_to_extreme(points: Sequence[Sequence]) -> list[Vector]:
    """Drop duplicates and every point lying in the hull of the others."""
    uniq = sorted({tuple(to_fraction(v) for v in p) for p in points})
    keep = []
    for i, p in enumerate(uniq):
        others = uniq[:i] + uniq[i + 1:]
        if convex_combination(p, others) is None:
            keep.append(p)
    return keep


def max_margin_direction(vectors: Sequence[Sequence], box: Fraction = Fraction(1)):
    """Solve max t s.t. d @ u >= t for all u, |d_i| <= box.

    Returns (t, d). ``t > 0`` certifies that the origin is strictly separated
    from the hull of ``vectors``.
    """
    k = len(vectors[0])
    # vars: d+ (k), d- (k), t+ , t-
    nv = 2 * k + 2
    A_ub, b_ub = [], []
    for u in vectors:
        u = [to_fraction(x) for x in u]
        A_ub.append([-x for x in u] + list(u) + [Fraction(1), Fraction(-1)])
        b_ub.append(Fraction(0))
    for i in range(2 * k):
        row = [Fraction(0)] * nv
        row[i] = Fraction(1)
        A_ub.append(row)
        b_ub.append(box)
    row = [Fraction(0)] * nv
    row[2 * k] = Fraction(1)
    A_ub.append(row)
    b_ub.append(box * k * max(max(abs(to_fraction(x)) for x in u) for u in vectors) + 1)
    c = [Fraction(0)] * (2 * k) + [Fraction(1), Fraction(-1)]
    res = linprog(c, A_ub, b_ub)
    if res.status != OPTIMAL:
        raise RuntimeError(f"margin LP ended {res.status}")
    x = res.x
    d = tuple(x[i] - x[k + i] for i in range(k))
    return res.value, d
