import math
import random

import pytest

from archfactor import (GammaExpression, SingularEvaluationError, divisor_of,
                        evaluate_log, gamma_c, gamma_r, identity, linear,
                        loggamma_signed, multiply, normalize, order_at, power,
                        prefactor, render)
from helpers import nonsingular_points, random_expression


def logs_agree(x, y, s, tol=1e-11):
    lx, sx = evaluate_log(x, s)
    ly, sy = evaluate_log(y, s)
    return sx == sy and abs(lx - ly) < tol


def test_identity_is_empty():
    assert identity().is_identity()
    assert render(identity()) == "1"
    val, sign = evaluate_log(identity(), 0.37)
    assert val == 0.0 and sign == 1


def test_multiply_merges_and_cancels():
    x = multiply(gamma_r(0, 2), gamma_r(0, -2))
    assert x.is_identity()
    y = multiply(gamma_c(-1, 1), gamma_c(-1, 3))
    assert y.gc == {-1: 4}


def test_power_zero_and_negative():
    x = multiply(gamma_r(1, 2), linear(-3, 1))
    assert power(x, 0).is_identity()
    inv = power(x, -1)
    assert inv.gr == {1: -2} and inv.lin == {-3: -1}
    assert power(power(x, -2), -1) == power(x, 2)


def test_gamma_r_divisor():
    div = divisor_of(gamma_r(0, 1), (-4, 2))
    assert div.orders == {0: -1, -2: -1, -4: -1}
    assert div.tail_even == -1 and div.tail_odd == 0
    assert div.tail_from == 0


def test_gamma_c_shifted_divisor():
    # GC(s-1) blows up at every integer s <= 1
    div = divisor_of(gamma_c(-1, 1), (-2, 3))
    assert div.orders == {1: -1, 0: -1, -1: -1, -2: -1}
    assert div.tail_even == -1 and div.tail_odd == -1


def test_divisor_tail_lookup_and_gap():
    div = divisor_of(gamma_r(0, 1), (-4, 2))
    assert div.order(-100) == -1
    assert div.order(-99) == 0
    narrow = divisor_of(linear(-8, 2), (-4, 2))
    with pytest.raises(ValueError):
        narrow.order(-6)  # between window and certified tail


def test_order_at_matches_linear_factors():
    x = multiply(linear(2, 3), gamma_c(0, -1))
    assert order_at(x, 2) == 3
    assert order_at(x, 0) == 1  # zero of GC^-1
    assert order_at(x, 1) == 0


def test_evaluate_gamma_r_at_one():
    # GR(1) = pi^(-1/2) Gamma(1/2) = 1
    val, sign = evaluate_log(gamma_r(0, 1), 1.0)
    assert sign == 1
    assert abs(val) < 1e-12


def test_evaluate_gamma_c_at_one():
    # GC(1) = (2 pi)^(-1)
    val, sign = evaluate_log(gamma_c(0, 1), 1.0)
    assert sign == 1
    assert abs(val + math.log(2 * math.pi)) < 1e-12


def test_evaluate_negative_arguments_signed():
    # Gamma(-0.5) < 0, Gamma(-1.5) > 0; check through math.gamma
    for z in (-0.5, -1.5, -2.3, -3.7):
        lg, sign = loggamma_signed(z)
        ref = math.gamma(z)
        assert sign == (1 if ref > 0 else -1)
        assert abs(lg - math.log(abs(ref))) < 1e-12


def test_evaluate_log_homomorphism():
    rng = random.Random(101)
    for _ in range(25):
        x = random_expression(rng)
        y = random_expression(rng)
        xy = multiply(x, y)
        for s in nonsingular_points(rng, xy, 2):
            try:
                lx, sx = evaluate_log(x, s, guard=1e-6)
                ly, sy = evaluate_log(y, s, guard=1e-6)
            except SingularEvaluationError:
                continue
            lxy, sxy = evaluate_log(xy, s, guard=1e-6)
            assert sxy == sx * sy
            assert abs(lxy - (lx + ly)) < 1e-10


def test_order_additivity():
    rng = random.Random(55)
    for _ in range(50):
        x = random_expression(rng)
        y = random_expression(rng)
        for m in range(-8, 6):
            assert (order_at(multiply(x, y), m)
                    == order_at(x, m) + order_at(y, m))


def test_singularity_guard():
    with pytest.raises(SingularEvaluationError):
        evaluate_log(gamma_r(0, 1), 0.0)
    with pytest.raises(SingularEvaluationError):
        evaluate_log(gamma_r(0, 1), -2.0 + 1e-12)
    with pytest.raises(SingularEvaluationError):
        evaluate_log(gamma_c(0, 1), -3.0)
    with pytest.raises(SingularEvaluationError):
        evaluate_log(linear(2, 1), 2.0)
    # regular integer points are fine
    evaluate_log(gamma_r(0, 1), 2.0)
    evaluate_log(gamma_c(-1, 1), 3.0)


def test_duplication_pairs_into_gc():
    # GR(s) GR(s+1) = 2 GC(s); normalize must book the 2
    x = multiply(gamma_r(0, 1), gamma_r(1, 1))
    n = normalize(x)
    assert n.gr == {} and n.gc == {0: 1}
    assert n.a2 == 1
    for s in (0.3, 1.7, 2.5):
        assert logs_agree(x, n, s, tol=1e-12)
        val, sign = evaluate_log(x, s)
        ref, _ = evaluate_log(gamma_c(0, 1), s)
        assert abs(val - (math.log(2) + ref)) < 1e-12


def test_duplication_chain_lowest_first():
    x = GammaExpression(gr={0: 1, 1: 2, 2: 1})
    n = normalize(x)
    assert n.gr == {} and n.gc == {0: 1, 1: 1} and n.a2 == 2
    for s in (0.3, 1.7, 2.5):
        assert logs_agree(x, n, s, tol=1e-12)


def test_linear_absorption_raises_shift():
    # ((s-1)/2pi) * GC(s-1) = GC(s)
    x = multiply(linear(1, 1), gamma_c(-1, 1))
    n = normalize(x)
    assert n == gamma_c(0, 1)
    for s in (0.3, 1.7, 2.5):
        assert logs_agree(x, n, s, tol=1e-12)


def test_linear_absorption_lowers_shift():
    # GC(s+3)^-1 * ((s)/2pi)((s+1)/2pi)((s+2)/2pi) = GC(s)^-1
    x = GammaExpression(gc={3: -1}, lin={0: 1, -1: 1, -2: 1})
    n = normalize(x)
    assert n == gamma_c(0, -1)
    for s in (0.3, 1.7, 2.5):
        assert logs_agree(x, n, s, tol=1e-12)


def test_normalize_preserves_value_randomized():
    rng = random.Random(2024)
    for _ in range(30):
        x = random_expression(rng, size=4)
        n = normalize(x)
        pts = nonsingular_points(rng, multiply(x, n), 10)
        for s in pts:
            assert logs_agree(x, n, s, tol=1e-11)


def test_normalize_is_idempotent():
    rng = random.Random(77)
    for _ in range(40):
        n = normalize(random_expression(rng, size=4))
        assert normalize(n) == n


def test_prefactor_evaluation():
    x = prefactor(a2="1/2", bpi=2)
    val, sign = evaluate_log(x, 3.0)
    assert sign == 1
    assert abs(val - (0.5 * math.log(2) + 6 * math.log(math.pi))) < 1e-12


def test_render_forms():
    assert render(gamma_r(0, 1)) == "GR(s+0)^1"
    assert render(gamma_c(-1, -2)) == "GC(s-1)^-2"
    assert render(linear(2, 1)) == "((s-2)/2pi)^1"
    assert render(linear(-1, 3)) == "((s+1)/2pi)^3"
    assert "2^(1/2)" in render(prefactor(a2="1/2"))
    assert "pi^(0+1 s)" in render(prefactor(bpi=1))


def test_canonical_zero_exponents_dropped():
    x = GammaExpression(gr={0: 0, 2: 1}, gc={1: 0}, lin={0: 0})
    assert x.gr == {2: 1} and x.gc == {} and x.lin == {}
    assert x == gamma_r(2, 1)
