"""Exact trig algebra: product-to-sum reduction and the normalized trace.

Expected trace values are frozen from the closed-form antiderivatives and
cross-checked numerically against quadrature, which is independent of the
symbolic reduction path.
"""

import math
import random
from fractions import Fraction

import pytest
from scipy.integrate import quad

from freeprod.trigalg import PI_ONE, PI_ZERO, PiValue, TrigPoly, mul, trace


C = TrigPoly.cos(1)
S = TrigPoly.sin(1)


def rand_poly(rng, max_k=4, terms=3):
    out = TrigPoly.zero()
    for _ in range(rng.randint(1, terms)):
        k = rng.randint(0, max_k)
        q = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
        if rng.random() < 0.5 or k == 0:
            out = out + TrigPoly.cos(k, q)
        else:
            out = out + TrigPoly.sin(k, q)
    return out


def test_product_to_sum_examples():
    # c*c = 1/2 + 1/2 c2 ; c*s = 1/2 s2
    assert mul(C, C) == TrigPoly.const(Fraction(1, 2)) + TrigPoly.cos(2, Fraction(1, 2))
    assert mul(C, S) == TrigPoly.sin(2, Fraction(1, 2))
    # 2c^2 - 1 = c2
    assert mul(C, C) * 2 - TrigPoly.const(1) == TrigPoly.cos(2)


def test_negative_index_folding():
    # cos is even, sin is odd, sin 0 = 0
    assert TrigPoly({("c", -3): 1}) == TrigPoly.cos(3)
    assert TrigPoly({("s", -3): 1}) == TrigPoly.sin(3, -1)
    assert TrigPoly({("s", 0): 5}) == TrigPoly.zero()


@pytest.mark.parametrize("seed", range(8))
def test_mul_commutative_associative(seed):
    rng = random.Random(seed)
    f, g, h = (rand_poly(rng) for _ in range(3))
    assert mul(f, g) == mul(g, f)
    assert mul(mul(f, g), h) == mul(f, mul(g, h))


@pytest.mark.parametrize("seed", range(6))
def test_mul_matches_pointwise_numeric(seed):
    rng = random.Random(100 + seed)
    f, g = rand_poly(rng), rand_poly(rng)
    prod = mul(f, g)
    for i in range(7):
        theta = 0.1 + i * 0.2
        assert prod.eval_numeric(theta) == pytest.approx(
            f.eval_numeric(theta) * g.eval_numeric(theta), abs=1e-12)


def test_trace_examples():
    # constant 1 -> 1 (normalized measure)
    assert trace(TrigPoly.const(1)) == PI_ONE
    # c*s = (1/2) s2, trace (2/pi)*(1/2)*2 = 1/pi
    assert trace(mul(C, S)) == PiValue.lam(1)
    # tr(c) = 2/pi, tr(s) = 2/pi
    assert trace(C) == PiValue.lam(2)
    assert trace(S) == PiValue.lam(2)


def test_trace_even_cosines_vanish():
    for k in range(1, 51):
        assert trace(TrigPoly.cos(2 * k)).is_zero()


def test_trace_squares():
    half = PiValue.of(Fraction(1, 2))
    assert trace(mul(C, C)) == half
    assert trace(mul(S, S)) == half
    assert trace(mul(C, C)) + trace(mul(S, S)) == PI_ONE


@pytest.mark.parametrize("seed", range(6))
def test_trace_matches_quadrature(seed):
    rng = random.Random(200 + seed)
    f = rand_poly(rng)
    want, err = quad(f.eval_numeric, 0.0, math.pi / 2)
    got = trace(f).eval_numeric() * (math.pi / 2)
    assert got == pytest.approx(want, abs=1e-9 + 10 * err)


@pytest.mark.parametrize("seed", range(10))
def test_trace_positivity_numeric(seed):
    rng = random.Random(300 + seed)
    f = rand_poly(rng)
    assert trace(mul(f, f)).eval_numeric() >= -1e-12


def test_pivalue_arithmetic_and_zero_test():
    lam = PiValue.lam(1)
    v = lam * lam * 4 + PiValue.of(Fraction(1, 2))
    assert v.coeff(2) == 4
    assert v.coeff(0) == Fraction(1, 2)
    assert (v - v).is_zero()
    assert v.eval_numeric() == pytest.approx(0.5 + 4 / math.pi**2)
    assert str(PI_ZERO) == "0"
    assert str(lam) == "L"
    assert str(-lam) == "-L"
    assert str(v) == "1/2 + 4*L^2"


def test_eval_numeric_examples():
    assert PI_ZERO.eval_numeric() == 0.0
    assert PiValue.lam(1).eval_numeric() == pytest.approx(0.3183098861837907)
    assert PiValue.of(Fraction(1, 2)).eval_numeric() == 0.5


def test_parse_trig_encoding():
    from freeprod.trigalg import parse_trig

    assert parse_trig("c") == C
    assert parse_trig("s[3]") == TrigPoly.sin(3)
    assert parse_trig("1/2 + 1/2*c[2]") == mul(C, C)
    assert parse_trig("c*s") == mul(C, S)
    assert parse_trig("-s + 2*c") == TrigPoly.sin(1, -1) + TrigPoly.cos(1, 2)
    assert parse_trig("c*s*(c*c - 1/2)*s") == \
        mul(mul(mul(C, S), mul(C, C) - TrigPoly.const(Fraction(1, 2))), S)


def test_parse_trig_errors():
    from freeprod.trigalg import parse_trig

    with pytest.raises(ValueError):
        parse_trig("c s")  # juxtaposition is not a product
    with pytest.raises(ValueError):
        parse_trig("(c")
    with pytest.raises(ValueError):
        parse_trig("q")
    with pytest.raises(ValueError):
        parse_trig("3/")
