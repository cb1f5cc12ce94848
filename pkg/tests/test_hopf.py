from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from ppsums.compositions import Composition, compositions_of, reverse
from ppsums.hopf import (
    INVOLUTIONS,
    TensorElement,
    coproduct_M,
    coproduct_oracle,
    coproduct_power_sum,
    coproduct_via_truncation,
    multiply,
    multiply_power_sums,
    omega,
    psi,
    rho,
    tensor,
    tensor_from_two_alphabet,
)
from ppsums.posets import antichain_poset, dual, dual_labelling, poset_from_covers
from ppsums.ppartitions import TruncatedPolynomial
from ppsums.qsym import F, M, P, Pr, QSymElement, poset_to_M, power_sum, reverse_power_sum
from ppsums.verify import all_posets

small = st.lists(st.integers(1, 3), max_size=3).map(Composition)


def sign(alpha):
    return (-1) ** (alpha.size - len(alpha))


# -- product ------------------------------------------------------------------

def test_multiply_examples():
    assert multiply(M(1), M(1)) == QSymElement("M", {(1, 1): 2, (2,): 1})
    assert multiply(M(1), M(2)) == M(1, 2) + M(2, 1) + M(3)
    assert multiply(QSymElement.one(), F(2, 1)) == F(2, 1)
    assert multiply(M(1) + QSymElement.one(), M(1)) == M(1) + 2 * M(1, 1) + M(2)


def test_multiply_power_sums_examples():
    assert multiply_power_sums((1,), (1,)) == P(1, 1)
    assert multiply_power_sums((1,), (1,)).coefficient((1, 1)) == 1
    assert multiply_power_sums((2,), (1,)) == P(2, 1) + P(1, 2)
    out = multiply_power_sums((1, 1), (1,))
    assert out.terms == {(1, 1, 1): Fraction(1)}
    assert multiply_power_sums((1,), (1,), reverse=True).basis == "Pr"


def test_quasi_shuffle_rule_for_M():
    # M_a M_b: overlapping shuffles, checked on small cases
    assert multiply(M(1, 1), M(1)) == 3 * M(1, 1, 1) + M(2, 1) + M(1, 2)


@settings(max_examples=30, deadline=None)
@given(small, small)
def test_power_sum_products_match_oracle(a, b):
    assume(a.size + b.size <= 6)
    assert multiply_power_sums(a, b).to_M() == multiply(power_sum(a), power_sum(b))
    assert multiply_power_sums(a, b, reverse=True).to_M() == multiply(reverse_power_sum(a), reverse_power_sum(b))


@settings(max_examples=20, deadline=None)
@given(small, small)
def test_multiply_commutative(a, b):
    assume(a.size + b.size <= 6)
    assert multiply(M(*a), F(*b)) == multiply(F(*b), M(*a))


# -- coproduct ------------------------------------------------------------------

def test_coproduct_M_deconcatenates():
    out = coproduct_M(M(1, 2))
    assert out.terms == {((), (1, 2)): 1, ((1,), (2,)): 1, ((1, 2), ()): 1}


def test_coproduct_power_sum_examples():
    out = coproduct_power_sum((1, 1))
    assert out.terms == {((), (1, 1)): 1, ((1,), (1,)): 2, ((1, 1), ()): 1}
    out = coproduct_power_sum((2, 1))
    assert out.terms == {((), (2, 1)): 1, ((2,), (1,)): 1, ((2, 1), ()): 1}
    assert coproduct_power_sum((), reverse=True).terms == {((), ()): 1}


def test_coproduct_oracle_antichain():
    K = poset_to_M(antichain_poset((1, 1)))
    expected = TensorElement("M", {((), (1, 1)): 2, ((), (2,)): 1, ((1,), (1,)): 2,
                                   ((1, 1), ()): 2, ((2,), ()): 1})
    assert coproduct_oracle(antichain_poset((1, 1))) == expected
    assert coproduct_M(K) == expected


def test_coproduct_via_truncation_matches_lower_sets():
    for k in range(4):
        for P_ in all_posets(k):
            assert coproduct_via_truncation(P_) == coproduct_oracle(P_)


@pytest.mark.parametrize("alpha", compositions_of(3) + compositions_of(4))
def test_power_sum_coproduct_rule(alpha):
    assert coproduct_power_sum(alpha).to_M() == coproduct_M(power_sum(alpha))
    assert coproduct_power_sum(alpha, reverse=True).to_M() == coproduct_M(reverse_power_sum(alpha))


def test_tensor_from_two_alphabet_rejects():
    with pytest.raises(ValueError, match="variables"):
        tensor_from_two_alphabet(TruncatedPolynomial(3), 2)
    with pytest.raises(ValueError):
        tensor_from_two_alphabet(TruncatedPolynomial(4, {(1, 0, 0, 0): 1}), 2)
    with pytest.raises(ValueError):
        tensor_from_two_alphabet(TruncatedPolynomial(4, {(0, 1, 0, 0): 1}), 2)


def test_tensor_element_json_and_rendering():
    t = coproduct_power_sum((1, 1))
    back = TensorElement.from_json_obj(t.to_json_obj())
    assert back == t and back.basis == "P"
    assert t.to_plain() == "1*P[e] (x) P[1,1] + 2*P[1] (x) P[1] + 1*P[1,1] (x) P[e]"
    assert TensorElement("M").to_plain() == "0"
    assert tensor(M(1), F(1)) == TensorElement("M", {((1,), (1,)): 1})


# -- involutions ----------------------------------------------------------------

def test_involution_examples_on_F():
    assert psi(F(1, 2)) == F(2, 1)
    assert rho(F(1, 2)) == F(2, 1)
    assert omega(F(1, 2)) == F(1, 2)
    assert omega(F(3)) == F(1, 1, 1)
    assert set(INVOLUTIONS) == {"psi", "rho", "omega"}


@pytest.mark.parametrize("alpha", [a for n in range(1, 6) for a in compositions_of(n)])
def test_involutions_on_power_sums(alpha):
    s = sign(alpha)
    assert psi(P(*alpha)) == s * Pr(*alpha)
    assert rho(P(*alpha)) == Pr(*reverse(alpha))
    assert omega(P(*alpha)) == s * P(*reverse(alpha))
    assert psi(Pr(*alpha)) == s * P(*alpha)
    assert rho(Pr(*alpha)) == P(*reverse(alpha))
    assert omega(Pr(*alpha)) == s * Pr(*reverse(alpha))


@pytest.mark.parametrize("alpha", [a for n in range(1, 5) for a in compositions_of(n)])
def test_involutions_square_to_identity(alpha):
    for f in (psi, rho, omega):
        assert f(f(F(*alpha))) == F(*alpha)
    assert omega(F(*alpha)) == rho(psi(F(*alpha)))


def poset_sign(P_):
    return (-1) ** (P_.total_weight() - len(P_))


def test_involutions_on_posets():
    for P_ in all_posets(3) + all_posets(3, label_dualized=True):
        K = poset_to_M(P_)
        assert psi(K) == poset_sign(P_) * poset_to_M(dual_labelling(P_))
        assert rho(K) == poset_to_M(dual_labelling(dual(P_)))
        assert omega(K) == poset_sign(P_) * poset_to_M(dual(P_))


def test_involutions_on_weighted_poset():
    P_ = poset_from_covers(["2_1", "1_1", "1_2"], [("2_1", "1_1")])
    K = poset_to_M(P_)
    assert poset_sign(P_) == -1
    assert omega(K) == -poset_to_M(dual(P_))
    assert psi(K) == -poset_to_M(dual_labelling(P_))
