"""Zeta-regularized determinants of shifted eigenvalue progressions.

For an infinite descending progression m0, m0 - step, m0 - 2*step, ...
of eigenvalues of multiplicity mu, the determinant of (s - theta)/(2*pi)
restricted to that block is defined through the Hurwitz zeta function:
with x = (s - m0)/step and c = 2*pi/step,

    zeta_block(z) = mu * c^z * zeta_H(z, x),
    det = exp(-zeta_block'(0)).

Differentiating and using zeta_H(0, x) = 1/2 - x together with
zeta_H'(0, x) = log Gamma(x) - (1/2) log(2*pi) gives the closed forms

    step 1:  det = GC(s - m0)^(-mu)                (constant exactly 1)
    step 2:  det = 2^(mu/2) * GR(s - m0)^(-mu).

Finite progressions are plain products of the factors (s - m)/(2*pi).
The closed forms are returned as exact :class:`GammaExpression` values;
:func:`hurwitz_zeta_deriv0` evaluates -zeta_block'(0) for mu = 1 by
direct Euler-Maclaurin summation, with no Gamma function anywhere, and
serves as the independent numerical oracle for all of the above.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from .cyclic import Progression, SpectralMeasure
from .gamma import GammaExpression, identity, multiply, power

# Euler-Maclaurin configuration: explicit terms, then B_2 .. B_12
# correction terms on the remainder.
_EM_TERMS = 10_000
_B_EVEN = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
)


def regdet_progression(p: Progression) -> GammaExpression:
    """Exact closed form of the block determinant of one progression."""
    if p.multiplicity == 0 or p.count == 0:
        return identity()
    if p.count is not None:
        lin: dict = {}
        for k in range(p.count):
            m = p.first - k * p.step
            lin[m] = lin.get(m, 0) + p.multiplicity
        return GammaExpression(lin=lin)
    if p.step == 1:
        return GammaExpression(gc={-p.first: -p.multiplicity})
    if p.step == 2:
        return GammaExpression(gr={-p.first: -p.multiplicity},
                               a2=Fraction(p.multiplicity, 2))
    raise ValueError(f"no closed form for infinite step-{p.step} progressions")


class DeterminantRatio(NamedTuple):
    """Block determinants of a full spectral measure."""

    even: GammaExpression
    odd: GammaExpression
    ratio: GammaExpression


def regdet_measure(measure: SpectralMeasure) -> DeterminantRatio:
    """Determinant of each parity block and the even/odd ratio."""
    even = identity()
    for p in measure.even:
        even = multiply(even, regdet_progression(p))
    odd = identity()
    for p in measure.odd:
        odd = multiply(odd, regdet_progression(p))
    return DeterminantRatio(even, odd, multiply(even, power(odd, -1)))


def hurwitz_zeta_deriv0(x: float, two_pi_over_delta: float) -> float:
    """-d/dz [ c^z * zeta_H(z, x) ] at z = 0 for c = two_pi_over_delta.

    This is log det for a single unit-multiplicity infinite progression
    with x = (s - m0)/delta, evaluated with no recourse to Gamma: the
    Hurwitz zeta value and derivative at 0 come from Euler-Maclaurin
    summation with 10^4 explicit terms and Bernoulli corrections through
    B_12.  Requires x > 0 and c > 0.
    """
    if x <= 0:
        raise ValueError(f"need x > 0, got {x}")
    if two_pi_over_delta <= 0:
        raise ValueError(f"need c > 0, got {two_pi_over_delta}")
    n = _EM_TERMS
    a = x + n
    log_a = math.log(a)
    # zeta_H(z, x) = sum_{k<n} (x+k)^-z + a^(1-z)/(z-1) + a^-z/2
    #               + sum_i B_2i/(2i)! * z(z+1)..(z+2i-2) * a^(-z-2i+1)
    # evaluated termwise at z = 0 and differentiated termwise in z.
    value0 = n - a + 0.5
    deriv0 = -math.fsum(math.log(x + k) for k in range(n))
    deriv0 += a * log_a - a - 0.5 * log_a
    for i, b2i in enumerate(_B_EVEN, start=1):
        deriv0 += b2i / ((2 * i) * (2 * i - 1)) * a ** (1 - 2 * i)
    return -(math.log(two_pi_over_delta) * value0 + deriv0)
