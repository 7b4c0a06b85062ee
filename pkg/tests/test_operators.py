from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numindex import Operator, admissible_pairs, l1, linf, lp, numerical_radius, numerical_range, octagon, op_norm
from numindex.errors import PreconditionError
from numindex.operators import identity, random_rational_operator, zero
from numindex.verify.sampling import DEFAULT_DENSITY, sample_radius

from conftest import FIVE

q = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def rational_operators(n):
    return st.lists(st.lists(q, min_size=n, max_size=n), min_size=n, max_size=n)


def brute_radius(S, T):
    """Independent reference: facet-by-facet, x*(Tx) is linear on the facet, so check its vertices."""
    A = np.array(T.entries, dtype=object)
    best = F(0)
    for f in S.facets:
        for v in S.facet_vertices(f):
            Tv = A.dot(np.array(v, dtype=object))
            best = max(best, abs(sum(a * b for a, b in zip(f, Tv))))
    return best


def test_operator_entries_exact_or_float():
    T = Operator(linf(2), [[1, "1/2"], [0, -1]])
    assert T.exact and T.entries[0][1] == F(1, 2)
    U = Operator(linf(2), [[1.0, 0.5], [0, -1]])
    assert not U.exact
    with pytest.raises(PreconditionError):
        Operator(linf(2), [[1, 2]])


def test_op_norm_examples():
    S = linf(2)
    assert op_norm(identity(S)) == 1
    assert op_norm(Operator(S, [[1, 1], [0, 0]])) == 2
    assert op_norm(zero(S)) == 0


def test_admissible_pair_counts():
    assert len(admissible_pairs(linf(2))) == 16
    assert len(admissible_pairs(l1(2))) == 16
    S = octagon()
    assert len(admissible_pairs(S)) < len(S.vertices) * len(S.facets)
    for p in admissible_pairs(S):
        assert sum(a * b for a, b in zip(p.xstar, p.x)) == p.sigma


def test_radius_examples():
    for S in FIVE.values():
        assert numerical_radius(identity(S)) == 1
    assert numerical_radius(Operator(linf(2), [[0, 1], [0, 0]])) == 1
    rot = Operator(lp(2, 2), [[0.0, -1.0], [1.0, 0.0]])
    assert numerical_radius(rot) <= 1e-9


def test_range_examples():
    S = linf(2)
    r = numerical_range(identity(S))
    assert r.hull == (1, 1)
    assert all(iv == (1, 1) for _, iv in r.facet_intervals)
    r = numerical_range(Operator(S, [[1, 0], [0, -1]]))
    assert dict(r.facet_intervals)[(1, 0)] == (1, 1)
    assert r.hull == (-1, 1)
    assert numerical_range(zero(S)).hull == (0, 0)


def test_range_needs_exact_polytope_operator():
    with pytest.raises(PreconditionError):
        numerical_range(Operator(lp(2, 3), [[1.0, 0.0], [0.0, 1.0]]))


@pytest.mark.parametrize("name", sorted(FIVE))
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_radius_matches_brute_force_and_is_dominated(name, data):
    S = FIVE[name]
    T = Operator(S, data.draw(rational_operators(S.dim)))
    w = numerical_radius(T)
    assert w == brute_radius(S, T)
    assert w <= op_norm(T)
    assert numerical_range(T).radius == w


@pytest.mark.parametrize("name", ["linf2", "octagon", "l1_3"])
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_radius_seminorm_axioms(name, data):
    S = FIVE[name]
    T = Operator(S, data.draw(rational_operators(S.dim)))
    U = Operator(S, data.draw(rational_operators(S.dim)))
    c = data.draw(q)
    assert numerical_radius(T.scale(c)) == abs(c) * numerical_radius(T)
    assert numerical_radius(T + U) <= numerical_radius(T) + numerical_radius(U)


@pytest.mark.parametrize("name", sorted(FIVE))
def test_range_hull_endpoints_attained_by_positive_pairs(name):
    S = FIVE[name]
    rng = np.random.default_rng(3)
    for _ in range(10):
        T = random_rational_operator(S, rng)
        lo, hi = numerical_range(T).hull
        vals = {sum(a * b for a, b in zip(p.xstar, T(p.x))) for p in admissible_pairs(S) if p.sigma == 1}
        assert lo in vals and hi in vals


def test_sampling_oracle_bounded_by_exact_and_monotone():
    rng = np.random.default_rng(11)
    for S in (linf(2), octagon(), l1(3)):
        for _ in range(5):
            T = random_rational_operator(S, rng)
            exact = float(numerical_radius(T))
            prev = 0.0
            for d in range(0, DEFAULT_DENSITY + 1, 2):
                s = sample_radius(S, T.to_array(), d)
                assert s >= prev - 1e-12
                assert s <= exact + 1e-9
                prev = s
            assert abs(prev - exact) <= 1e-6 * (1 + float(op_norm(T)))


def test_float_operator_on_polytope_uses_sampling():
    S = octagon()
    T = Operator(S, [[0.5, 1.0], [-0.25, 2.0]])
    E = Operator(S, [["1/2", 1], ["-1/4", 2]])
    assert isinstance(numerical_radius(T), float)
    assert numerical_radius(T) == pytest.approx(float(numerical_radius(E)), abs=1e-9)
    assert op_norm(T) == pytest.approx(float(op_norm(E)), abs=1e-9)


def test_lp_radius_and_norm_sampled():
    S = lp(2, 3)
    T = Operator(S, [[2.0, 0.0], [0.0, 1.0]])
    assert numerical_radius(T) == pytest.approx(2.0, abs=1e-6)
    assert op_norm(T) == pytest.approx(2.0, abs=1e-6)
    assert op_norm(Operator(lp(2, 2), [[1.0, 1.0], [1.0, 1.0]])) == pytest.approx(2.0, abs=1e-6)
