"""End-to-end check that the completed Gamma-factor product and the
regularized-determinant ratio agree.

The two sides are built by unrelated routes.  The left side multiplies
the classical local factors with alternating exponents; the right side
regularizes the spectrum of the scaling generator block by block.  The
comparison is done where it is meaningful:

* the divisors of zeros and poles on an integer window, including the
  eventually periodic tails, must agree exactly;
* the ratio LHS/RHS, evaluated at sample points to the right of every
  zero and pole, must be a constant (s-independent); its log is
  reported, not asserted, since the regularization is allowed to leave
  a harmless constant such as a power of sqrt(2) behind.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass

from .cyclic import theta_spectrum, weight_spectrum
from .factors import completed_alternating_product, serre_factor
from .gamma import (SINGULARITY_GUARD, Divisor, divisor_of, evaluate_log,
                    identity, order_at, power)
from .hodge import HodgeData, validate
from .regdet import regdet_measure


def compare_divisors(a: Divisor, b: Divisor):
    """(equal, witness): pointwise equality on the common window plus
    equality of tail constants.  The witness is the smallest-|m|
    disagreement point, or None when equal.
    """
    if (a.lo, a.hi) != (b.lo, b.hi):
        raise ValueError("divisors computed on different windows")
    cover = min(a.tail_from, b.tail_from)
    if cover < a.lo - 1:
        raise ValueError(
            f"window [{a.lo},{a.hi}] too narrow to certify tails "
            f"(stable only from {cover})")
    worst = None
    for m in range(a.lo, a.hi + 1):
        if a.orders.get(m, 0) != b.orders.get(m, 0):
            if worst is None or (abs(m), m) < (abs(worst), worst):
                worst = m
    if worst is not None:
        return False, worst
    if (a.tail_even, a.tail_odd) != (b.tail_even, b.tail_odd):
        even_bad = a.tail_even != b.tail_even
        odd_bad = a.tail_odd != b.tail_odd
        cands = [m for m in (a.lo - 1, a.lo - 2)
                 if (even_bad if m % 2 == 0 else odd_bad)]
        return False, min(cands, key=lambda m: (abs(m), m))
    return True, None


@dataclass(frozen=True)
class SamplePoint:
    s: float
    lhs_log: float
    rhs_log: float
    signs_agree: bool


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one verification run.

    ``constant_log`` is the mean of log(LHS) - log(RHS) over the sample
    points and ``constant_stddev`` its population spread; a genuine
    identity-up-to-constant shows a spread at roundoff level.
    """

    name: str
    divisor_match: bool
    mismatch_witness: int | None
    window: tuple
    per_weight: tuple
    constant_log: float
    constant_stddev: float
    samples: tuple
    tol: float

    def ok(self, tol: float | None = None) -> bool:
        tol = self.tol if tol is None else tol
        return (self.divisor_match
                and all(match for _, match in self.per_weight)
                and all(p.signs_agree for p in self.samples)
                and self.constant_stddev < tol)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok(),
            "divisor_match": self.divisor_match,
            "mismatch_witness": self.mismatch_witness,
            "window": list(self.window),
            "per_weight": [[w, match] for w, match in self.per_weight],
            "constant_log": self.constant_log,
            "constant_stddev": self.constant_stddev,
            "samples": [{"s": p.s, "lhs_log": p.lhs_log,
                         "rhs_log": p.rhs_log,
                         "signs_agree": p.signs_agree}
                        for p in self.samples],
        }


def _check_samples(samples, exprs, min_dist=1e-6):
    for s in samples:
        for m in (math.floor(s), math.ceil(s)):
            if abs(s - m) < min_dist and any(order_at(x, m) for x in exprs):
                raise ValueError(
                    f"sample s={s} within {min_dist} of divisor point m={m}")


def verify_theorem(data: HodgeData, samples=None, window=None,
                   tol: float = 1e-9,
                   guard: float = SINGULARITY_GUARD) -> VerificationReport:
    """Compare the completed factor product against the determinant
    ratio of the scaling spectrum, divisor by divisor and numerically.

    Default sample points sit to the right of every zero and pole; the
    default window reaches low enough that both tails are certified.
    """
    bad = validate(data)
    if bad:
        raise ValueError("invalid data: " + "; ".join(bad))

    d = data.dim
    max_head = d
    if samples is None:
        samples = tuple(max_head + off for off in (0.7, 1.6, 2.5, 3.4))
    else:
        samples = tuple(float(s) for s in samples)
        if not samples:
            raise ValueError("need at least one sample point")
    if window is None:
        lo, hi = -30, max(5, d + 2)
    else:
        lo, hi = int(window[0]), int(window[1])
    lo = min(lo, math.floor(min(samples)) - 5, -20)
    hi = max(hi, max_head + 2)

    lhs = completed_alternating_product(data)
    rhs = regdet_measure(theta_spectrum(data)).ratio
    _check_samples(samples, (lhs, rhs))

    divisor_match, witness = compare_divisors(
        divisor_of(lhs, (lo, hi)), divisor_of(rhs, (lo, hi)))

    per_weight = []
    for w in range(0, 2 * d + 1):
        piece = data.piece(w)
        sign = 1 if w % 2 else -1
        lhs_w = (power(serre_factor(piece, data.place), sign)
                 if piece is not None else identity())
        rhs_w = regdet_measure(weight_spectrum(data, w)).ratio
        match, _ = compare_divisors(
            divisor_of(lhs_w, (lo, hi)), divisor_of(rhs_w, (lo, hi)))
        per_weight.append((w, match))

    points = []
    diffs = []
    for s in samples:
        l_log, l_sign = evaluate_log(lhs, s, guard)
        r_log, r_sign = evaluate_log(rhs, s, guard)
        points.append(SamplePoint(s, l_log, r_log, l_sign == r_sign))
        diffs.append(l_log - r_log)

    return VerificationReport(
        name=data.name,
        divisor_match=divisor_match,
        mismatch_witness=witness,
        window=(lo, hi),
        per_weight=tuple(per_weight),
        constant_log=statistics.fmean(diffs),
        constant_stddev=statistics.pstdev(diffs),
        samples=tuple(points),
        tol=tol,
    )
