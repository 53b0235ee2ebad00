"""Monomial order, normal forms, Janet decomposition and the Janet algorithm."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cases import carlitz_power, two_dimensional, field, random_presentation, random_skew, running_gens
from tmotives import ModElem, OrderSpec, presentation_from_tmodule, tau_ring
from tmotives.freemod import compare, leading
from tmotives.janet import (
    FULL,
    SIGMA_ONLY,
    JanetError,
    RoundsExceeded,
    auto_reduce,
    in_cone,
    janet_algorithm,
    janet_decomposition,
    normal_form,
    primitive_part,
)

# -- order ----------------------------------------------------------------------


def test_compare_examples():
    o = OrderSpec.identity(2)
    assert compare((1, 0, 1), (1, 1, 0), o) == -1  # sigma k1 < rho k1
    assert compare((2, 3, 0), (1, 0, 1), o) == -1  # position dominates
    assert compare((1, 2, 1), (1, 3, 0), o) == -1  # rho^2 sigma < rho^3
    assert compare((1, 2, 1), (1, 2, 1), o) == 0
    swapped = OrderSpec((2, 1))
    assert compare((2, 0, 0), (1, 5, 5), swapped) == 1


def test_order_rejects_non_permutations():
    with pytest.raises(ValueError):
        OrderSpec((1, 1))


monos = st.tuples(st.integers(1, 3), st.integers(0, 4), st.integers(0, 4))


@settings(max_examples=300, deadline=None)
@given(monos, monos, monos, st.permutations([1, 2, 3]))
def test_order_is_a_multiplicative_total_order(a, b, c, perm):
    o = OrderSpec(tuple(perm))
    assert compare(a, b, o) == -compare(b, a, o)
    assert (compare(a, b, o) == 0) == (a == b)
    if compare(a, b, o) < 0 and compare(b, c, o) < 0:
        assert compare(a, c, o) < 0
    if a[0] == b[0] and compare(a, b, o) < 0:
        assert compare((a[0], a[1] + 1, a[2]), (b[0], b[1] + 1, b[2]), o) < 0
        assert compare((a[0], a[1], a[2] + 1), (b[0], b[1], b[2] + 1), o) < 0


def test_leading_examples():
    K = field()
    R, _ = running_gens(K)
    rho, sig = R.rho(), R.sigma()
    o = OrderSpec.identity(2)
    p1 = ModElem.from_vector(R, [-(rho * sig) + rho, rho + sig])
    assert leading(p1, o) == ((1, 1, 1), -K.one)
    assert leading(ModElem.basis(R, 2, 1), o) == ((1, 0, 0), K.one)
    p4 = ModElem.from_vector(R, [R.zero(), rho**3 + rho**2 * sig - sig**2])
    assert leading(p4, o) == ((2, 3, 0), K.one)
    assert leading(p4.scale(K.theta() + 1), o)[0] == (2, 3, 0)
    with pytest.raises(ValueError):
        leading(p4.zero(), o)


# -- running example --------------------------------------------------------------


def test_running_example_janet_basis():
    K = field()
    R, (g1, g2, g3) = running_gens(K)
    o = OrderSpec.identity(2)
    assert auto_reduce([g1, g2, g3], o) == [g1, g2, g3]
    J = janet_algorithm([g1, g2, g3], o)
    assert J.certified and J.rounds == 1
    assert J.as_tuples() == [(g1, FULL), (g2.shift(1, 0), SIGMA_ONLY), (g2, SIGMA_ONLY), (g3, FULL)]
    # rho^2 g2 = -sigma^2 g1 + theta^(q^2) g1 + g3 reduces to zero
    assert not normal_form(g2.shift(2, 0), J)
    sig = R.sigma()
    T9 = R.scalar(K.theta() ** 9)
    assert g2.shift(2, 0) == g1.left_mul(-(sig**2) + T9) + g3


def test_single_reduction_step():
    K = field()
    R, (_, _, g3) = running_gens(K)
    o = OrderSpec.identity(2)
    J = janet_decomposition([g3], o)
    assert J.as_tuples() == [(g3, FULL)]
    rho, sig, T = R.rho(), R.sigma(), R.scalar(K.theta())
    g = ModElem.from_vector(R, [R.zero(), rho**2 * sig**2])
    expected = ModElem.from_vector(R, [R.zero(), sig**2 * (sig**2 - T) * (sig**2 - T**9)])
    assert normal_form(g, J) == expected
    # the difference is sigma^2 * g3
    assert g - normal_form(g, J) == g3.left_mul(sig**2)


def test_normal_form_of_zero():
    K = field()
    R, gens = running_gens(K)
    J = janet_algorithm(gens, OrderSpec.identity(2))
    assert normal_form(gens[0].zero(), J).is_zero()


def test_decomposition_needs_auto_reduced_input():
    K = field()
    R, (g1, g2, _) = running_gens(K)
    with pytest.raises(JanetError):
        janet_decomposition([g1, g1.shift(1, 0)], OrderSpec.identity(2))


def test_auto_reduce_trivial():
    K = field()
    R, _ = running_gens(K)
    k1, k2 = ModElem.basis(R, 2, 1), ModElem.basis(R, 2, 2)
    assert auto_reduce([k1, k1 + k2], OrderSpec.identity(2)) == [k1, k2]


# -- Carlitz square and the two-dimensional example -------------------------------


def test_carlitz_square_rounds():
    K = field()
    (p1, p2), R = presentation_from_tmodule(carlitz_power(K, 2))
    t, T, tau = R.sigma(), R.scalar(K.theta()), R.rho()
    assert p1 == ModElem.from_vector(R, [t - T, -R.one()])
    assert p2 == ModElem.from_vector(R, [-tau, t - T])
    o = OrderSpec.identity(2)
    J1 = janet_decomposition(auto_reduce([p1, p2], o), o)
    assert J1.as_tuples() == [(p2, FULL), (p1, frozenset({"sigma"}))]
    J = janet_algorithm([p1, p2], o, keep_history=True)
    p3 = ModElem.from_vector(R, [R.zero(), -tau + (t - T) * (t - T**3)])
    assert J.as_tuples() == [(p2, FULL), (p1, SIGMA_ONLY), (p3, FULL)]
    assert J.rounds == 2
    assert J.history[0]["P"] == [p3]


def test_two_dimensional_example_rounds():
    K = field()
    (p1, p2), R = presentation_from_tmodule(two_dimensional(K))
    t, T, tau = R.sigma(), K.theta(), R.rho()
    Ts = R.scalar
    o = OrderSpec((2, 1))
    p1p = p1 - p2.shift(1, 0)
    assert p1p == ModElem.from_vector(R, [tau + t - Ts(T), -(tau * t) + Ts(T**3) * tau])
    assert auto_reduce([p1, p2], o) == [p2, p1p]
    p3 = ModElem.from_vector(
        R,
        [
            tau**2 + 2 * tau * t - Ts(T**3) * tau - Ts(T**9) * tau + t - Ts(T**9),
            -(t - Ts(T)) * (t - Ts(T**9)),
        ],
    )
    p4 = ModElem.from_vector(
        R, [tau**3 + (2 * t - Ts(T**9) - Ts(T**27)) * tau**2 - (t - Ts(T)) * (t - Ts(T**27)), R.zero()]
    )
    J = janet_algorithm([p1, p2], o)
    assert J.rounds == 3
    assert J.as_tuples() == [(p2, FULL), (p1p, SIGMA_ONLY), (p3, SIGMA_ONLY), (p4, FULL)]


def test_rounds_exceeded_carries_state():
    K = field()
    (p1, p2), _ = presentation_from_tmodule(carlitz_power(K, 2))
    with pytest.raises(RoundsExceeded) as info:
        janet_algorithm([p1, p2], OrderSpec.identity(2), max_rounds=1)
    assert info.value.state


def test_primitive_part_keeps_primitive_elements():
    K = field()
    R, gens = running_gens(K)
    for g in gens:
        assert primitive_part(g) is g
    T = K.theta()
    g = gens[0].scale((T + 1) / (T**2 + 2))
    h = primitive_part(g)
    assert h == gens[0]
    assert all(c.den == (1,) for c in h.terms.values())


# -- properties -------------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 199), st.integers(0, 10**6))
def test_normal_form_idempotent_and_cone_free(seed, fseed):
    R, gens, o = random_presentation(seed)
    J = janet_algorithm(gens, o)
    rng = random.Random(fseed)
    f = ModElem.from_vector(R, [random_skew(R, rng, max_k=3, max_j=3) for _ in range(gens[0].d)])
    h = normal_form(f, J)
    assert normal_form(h, J) == h
    lms = J.leading_monomials()
    for m in h.terms:
        assert not any(in_cone(m, lm, p.mu) for lm, p in zip(lms, J.pairs))


def test_tmodule_presentation_ring():
    K = field()
    assert presentation_from_tmodule(carlitz_power(K, 2))[1].names == ("tau", "t")
    assert tau_ring(K).names == ("tau", "t")
