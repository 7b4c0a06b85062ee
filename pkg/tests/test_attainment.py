from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numindex import (
    Operator, attainment_set, bj_orthogonal_w, build_M, exposed_point_check, extreme_dual_w, linf, lp,
    nu_smooth, numerical_radius, octagon, rank_one_spear,
)
from numindex.attainment import exposed_face, exposing_operator
from numindex.errors import NotExtremeError, PreconditionError, ZeroRadius
from numindex.operators import admissible_pairs, identity, random_rational_operator, zero
from numindex.space import support_functional
from numindex.verify.sampling import refined_radius, sampled_attainment

from conftest import FIVE

q = st.fractions(min_value=-3, max_value=3, max_denominator=3)


def test_attainment_identity():
    a = attainment_set(identity(linf(2)))
    assert a.radius == 1 and len(a.pairs) == 8
    assert all(p.sign == 1 for p in a.pairs)


def test_attainment_nilpotent():
    a = attainment_set(Operator(linf(2), [[0, 1], [0, 0]]))
    assert a.radius == 1
    for p in a.pairs:
        assert abs(p.x[1]) == 1 and abs(p.xstar[0]) == 1


def test_attainment_both_signs():
    a = attainment_set(Operator(linf(2), [[1, 0], [0, -1]]))
    assert {p.sign for p in a.pairs} == {1, -1}


def test_attainment_zero_radius():
    with pytest.raises(ZeroRadius):
        attainment_set(zero(linf(2)))


@pytest.mark.parametrize("name", ["linf2", "octagon", "l1_3"])
def test_attainment_closed_under_joint_negation(name):
    S = FIVE[name]
    rng = np.random.default_rng(1)
    for _ in range(10):
        T = random_rational_operator(S, rng)
        if numerical_radius(T) == 0:
            continue
        a = attainment_set(T)
        keys = {(p.x, p.xstar, p.sign) for p in a.pairs}
        assert keys == {(tuple(-c for c in x), tuple(-c for c in xs), s) for x, xs, s in keys}


def test_bj_examples():
    S = linf(2)
    I = identity(S)
    r = bj_orthogonal_w(I, [Operator(S, [[1, 0], [0, -1]])])
    assert r.orthogonal
    assert sorted(c for _, c in r.coefficients) == [F(1, 2), F(1, 2)]
    r = bj_orthogonal_w(I, [I])
    assert not r.orthogonal
    assert r.perturbed_radius < 1
    assert bj_orthogonal_w(I, [zero(S)]).orthogonal


def test_bj_rejects_empty_W():
    with pytest.raises(PreconditionError):
        bj_orthogonal_w(identity(linf(2)), [])


def _ops(n):
    return st.lists(st.lists(q, min_size=n, max_size=n), min_size=n, max_size=n)


@pytest.mark.parametrize("name", ["linf2", "octagon"])
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_bj_soundness(name, data):
    S = FIVE[name]
    T = Operator(S, data.draw(_ops(2)))
    if numerical_radius(T) == 0:
        return
    W = [Operator(S, data.draw(_ops(2))) for _ in range(data.draw(st.integers(1, 2)))]
    r = bj_orthogonal_w(T, W)
    wT = numerical_radius(T)
    if r.orthogonal:
        assert sum(c for _, c in r.coefficients) == 1
        assert len(r.coefficients) <= len(W) + 1
        for p, c in r.coefficients:
            assert c > 0
        # zero combination of the attainment vectors
        for k, A in enumerate(W):
            assert sum(c * p.sign * sum(a * b for a, b in zip(p.xstar, A(p.x))) for p, c in r.coefficients) == 0
        rng = np.random.default_rng(0)
        for _ in range(256):
            P = T
            for A in W:
                P = P + A.scale(F(int(rng.integers(-40, 41)), int(rng.integers(1, 9))))
            assert numerical_radius(P) >= wT
    else:
        P = T
        for lam, A in zip(r.lam, W):
            P = P + A.scale(lam)
        assert numerical_radius(P) == r.perturbed_radius < wT


@settings(max_examples=20, deadline=None)
@given(data=st.data(), c=st.fractions(min_value=F(1, 4), max_value=5, max_denominator=4))
def test_bj_invariant_under_positive_scaling(data, c):
    S = linf(2)
    T = Operator(S, data.draw(_ops(2)))
    if numerical_radius(T) == 0:
        return
    W = [Operator(S, data.draw(_ops(2)))]
    assert bj_orthogonal_w(T, W).orthogonal == bj_orthogonal_w(T.scale(c), W).orthogonal


def test_rank_one_spear_example():
    T = rank_one_spear(linf(2), (1, 1), (1, 0), 1)
    assert T.entries == ((1, 0), (1, 0))
    assert numerical_radius(T) == 1


def test_rank_one_spear_preconditions():
    S = linf(2)
    with pytest.raises(PreconditionError):
        rank_one_spear(S, (1, 0), (0, 1), 1)
    with pytest.raises(PreconditionError):
        rank_one_spear(S, (1, 1), (1, 0), 2)
    with pytest.raises(PreconditionError):
        rank_one_spear(S, (F(1, 2), 0), (1, 0), 1)


@pytest.mark.parametrize("name", sorted(FIVE))
def test_rank_one_spear_radius_one(name):
    S = FIVE[name]
    for p in admissible_pairs(S):
        T = rank_one_spear(S, p.x, p.xstar, p.sigma)
        assert numerical_radius(T) == 1
        # the defining pair attains: [x* (x) x](T) = x*(x)^2 = 1
        assert sum(a * b for a, b in zip(p.xstar, T(p.x))) == 1


def test_rank_one_spear_lp3_sampled():
    S = lp(2, 3)
    T = rank_one_spear(S, (1.0, 0.0), (1.0, 0.0), 1)
    assert np.allclose(T.to_array(), [[1, 0], [0, 0]])
    assert abs(numerical_radius(T) - 1) <= 1e-3


def test_rank_one_spear_lp3_attainment_aligned():
    """Sampled maximizers of |x*(Tx)| for T = x0* (x) x0 sit at +-x0 only."""
    S = lp(2, 3)
    x0 = np.array([1.0, 1.0]) / 2 ** (1 / 3)
    f0 = support_functional(S, x0)[0]
    T = np.outer(x0, f0)
    pts, top = sampled_attainment(S, T, density=10, tol=1e-6)
    assert abs(top - 1) <= 1e-3
    u = x0 / np.linalg.norm(x0)
    for y in pts:
        assert abs(y @ u) / np.linalg.norm(y) >= 1 - 1e-3
    assert refined_radius(S, T)[0] == pytest.approx(1.0, abs=1e-6)


def test_nu_smooth():
    S = linf(2)
    assert not nu_smooth(identity(S))
    G0 = build_M(S)[0]
    T = Operator(S, G0.G)
    assert nu_smooth(T)
    assert exposed_face(T) == [G0.flat]
    with pytest.raises(ZeroRadius):
        nu_smooth(zero(S))


def test_nu_smooth_generic_perturbation_on_octagon():
    S = octagon()
    for tf in extreme_dual_w(S):
        t, H = exposing_operator(S, tf)
        assert nu_smooth(Operator(S, [list(H[:2]), list(H[2:])]))


@pytest.mark.parametrize("name", sorted(FIVE))
def test_every_extreme_functional_is_exposed(name):
    S = FIVE[name]
    assert all(exposed_point_check(S, tf) for tf in extreme_dual_w(S))


def test_exposed_check_rejects_non_extreme():
    S = linf(2)
    a, b = extreme_dual_w(S)[:2]
    mid = [[(x + y) / 2 for x, y in zip(ra, rb)] for ra, rb in zip(a.G, b.G)]
    with pytest.raises(NotExtremeError):
        exposed_point_check(S, mid)
