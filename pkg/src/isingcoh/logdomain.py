"""Log-domain accumulation primitives.

Thermal sums in this package mix Boltzmann factors whose exponents span
many thousands, so every sum of positive terms is carried as a list of
logarithms and collapsed with a max-shifted compensated sum.  Signed
sums (coherence numerators keep the sign of the magnetization) use the
same shift with the sign carried separately.

Summation order is the caller's term order and the mantissa reduction is
math.fsum, so results are reproducible bit for bit run to run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

NEG_INF = float("-inf")
LOG_TWO = math.log(2.0)


@dataclass(frozen=True)
class SignedLogReal:
    """A real number stored as sign and log magnitude.

    sign is -1, 0 or +1; log_magnitude is -inf exactly when sign == 0.
    """

    sign: int
    log_magnitude: float

    @property
    def value(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_magnitude)


def log_sum_exp(values: Iterable[float]) -> float:
    """log(sum(exp(v))) over finite or -inf entries, in the given order."""
    vals = [v for v in values if v != NEG_INF]
    if not vals:
        return NEG_INF
    m = max(vals)
    if m == math.inf:
        return math.inf
    return m + math.log(math.fsum(math.exp(v - m) for v in vals))


def signed_log_sum(signs: Sequence[int], log_mags: Sequence[float]) -> SignedLogReal:
    """Signed analogue of log_sum_exp: sum of sign_i * exp(log_mag_i)."""
    live = [(s, lm) for s, lm in zip(signs, log_mags) if s != 0 and lm != NEG_INF]
    if not live:
        return SignedLogReal(0, NEG_INF)
    m = max(lm for _, lm in live)
    total = math.fsum(s * math.exp(lm - m) for s, lm in live)
    if total == 0.0:
        return SignedLogReal(0, NEG_INF)
    sign = 1 if total > 0 else -1
    return SignedLogReal(sign, m + math.log(abs(total)))


def log_sinh(x: float) -> float:
    """log(sinh(x)) for x >= 0; -inf at x == 0."""
    if x < 0:
        raise ValueError("log_sinh expects x >= 0")
    if x == 0.0:
        return NEG_INF
    # sinh(x) = exp(x) (-expm1(-2x)) / 2; expm1 keeps tiny x accurate,
    # where log1p(-exp(-2x)) would cancel catastrophically
    return x + math.log(-math.expm1(-2.0 * x)) - LOG_TWO


def log_cosh(x: float) -> float:
    """log(cosh(x)) for any real x."""
    ax = abs(x)
    return ax + math.log1p(math.exp(-2.0 * ax)) - LOG_TWO
