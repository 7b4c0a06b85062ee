"""Exact vertex enumeration by the double description method.

The polytope ``{x : a @ x <= 1 for a in normals}`` is homogenized to the cone
``{(t, x) : t - a @ x >= 0, t >= 0}`` whose extreme rays with ``t > 0`` are the
vertices. All arithmetic is on primitive integer vectors; adjacency uses the
combinatorial test on zero sets stored as int bitmasks.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .._rational import Vector, integer_row, primitive, row_reduce, to_fraction
from ..errors import UnboundedInput


def _initial_rows(rows: list[tuple[int, ...]]) -> list[int]:
    chosen: list[int] = []
    basis: list[tuple[int, ...]] = []
    for i, r in enumerate(rows):
        if len(row_reduce(basis + [r])[1]) > len(basis):
            chosen.append(i)
            basis.append(r)
            if len(basis) == len(r):
                break
    return chosen


def _inverse_columns(rows: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    d = len(rows)
    aug = [list(r) + [int(i == j) for j in range(d)] for i, r in enumerate(rows)]
    rref, _ = row_reduce(aug)
    inv = [r[d:] for r in rref]
    return [integer_row([inv[i][j] for i in range(d)]) for j in range(d)]


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def extreme_rays(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone ``{y : r @ y >= 0 for r in rows}``."""
    rows = [tuple(r) for r in rows]
    D = len(rows[0])
    init = _initial_rows(rows)
    if len(init) < D:
        raise UnboundedInput("constraint rows do not determine a pointed cone")
    rays = _inverse_columns([rows[i] for i in init])
    zsets = []
    for r in rays:
        z = 0
        for i in init:
            if _dot(rows[i], r) == 0:
                z |= 1 << i
        zsets.append(z)
    need = D - 2
    done = set(init)
    for k, h in enumerate(rows):
        if k in done:
            continue
        vals = [_dot(h, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        bit = 1 << k
        new_rays, new_z = [], []
        for p in pos:
            zp = zsets[p]
            for q in neg:
                common = zp & zsets[q]
                if bin(common).count("1") < need:
                    continue
                adjacent = True
                for j, zj in enumerate(zsets):
                    if j != p and j != q and zj & common == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                vp, vq = vals[p], vals[q]
                r = primitive([vp * b - vq * a for a, b in zip(rays[p], rays[q])])
                new_rays.append(r)
                new_z.append(common | bit)
        rays = [rays[i] for i in pos] + [rays[i] for i in zer] + new_rays
        zsets = [zsets[i] for i in pos] + [zsets[i] | bit for i in zer] + new_z
        done.add(k)
    return rays


def enumerate_vertices(normals: Sequence[Sequence]) -> list[Vector]:
    """Vertices of ``{x : a @ x <= 1}``, sorted lexicographically.

    Raises UnboundedInput when the region is not a bounded polytope.
    """
    if not normals:
        raise UnboundedInput("no constraints")
    d = len(normals[0])
    rows = [(1,) + (0,) * d]
    for a in normals:
        a = [to_fraction(v) for v in a]
        if len(a) != d:
            raise ValueError("ragged constraint list")
        rows.append(integer_row([Fraction(1)] + [-v for v in a]))
    rays = extreme_rays(rows)
    out = set()
    for r in rays:
        if r[0] == 0:
            raise UnboundedInput("polyhedron has a recession direction")
        t = r[0]
        out.add(tuple(Fraction(v, t) for v in r[1:]))
    return sorted(out)
