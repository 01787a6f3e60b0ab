"""Ring-configuration counting and magnetization-resolved Ising weights.

A configuration of the n-site periodic ring is classified by the pair
(twos, d): ``twos`` is twice the net magnetization and ``d`` the number
of domain-wall pairs (walls come in pairs on a ring).  The Ising energy
of every configuration in a class is -(j/2) (n - 4 d), so thermal sums
over the ring reduce to sums over (twos, d) weighted by the class size

    degeneracy(twos, d, n) =
        1                                        if |twos| = n and d = 0
        0                                        if |twos| = n xor d = 0
        (n/d) C(h-1, d-1) C(n-h-1, d-1)          otherwise, h = (n-|twos|)/2

which vanishes whenever d exceeds (n - |twos|)/2.  Degeneracies are
exact Python integers for every supported n, so no overflow or floating
fallback is needed anywhere in this module.

r_weight collapses the wall sum at fixed magnetization,

    R(twos, n) = sum_d degeneracy(twos, d, n) exp(beta j (n - 4 d) / 2),

and is returned as log R because beta j (n - 4 d) / 2 routinely exceeds
the float exponent range.  r_hypergeometric evaluates the same R through
a terminating Gauss 2F1 series; it exists purely as an independent
cross-check of r_weight and is intended for moderate |beta j|.
"""

from __future__ import annotations

import math

from .logdomain import log_sum_exp


class NonTerminatingError(ValueError):
    """The Gauss series would not terminate for these arguments."""


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 for k outside 0..n."""
    if n < 0:
        raise ValueError(f"binomial expects n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _check_class_args(twos: int, n: int) -> None:
    if n < 1:
        raise ValueError(f"ring size must be >= 1, got {n}")
    if (twos - n) % 2 != 0:
        raise ValueError(f"twos={twos} must have the parity of n={n}")
    if abs(twos) > n:
        raise ValueError(f"|twos|={abs(twos)} exceeds n={n}")


def degeneracy(twos: int, d: int, n: int) -> int:
    """Number of ring configurations with magnetization twos/2 and d wall pairs."""
    _check_class_args(twos, n)
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    if abs(twos) == n or d == 0:
        return 1 if (abs(twos) == n and d == 0) else 0
    half_down = (n - abs(twos)) // 2
    if d > half_down:
        return 0
    count = n * binomial(half_down - 1, d - 1) * binomial(n - half_down - 1, d - 1)
    # the cyclic count (n/d) C(...) C(...) is always an exact integer
    assert count % d == 0
    return count // d


def valid_level_indices(n: int):
    """All (twos, d) classes with nonzero degeneracy, ascending twos then d."""
    for twos in range(-n, n + 1, 2):
        if abs(twos) == n:
            yield twos, 0
        else:
            for d in range(1, (n - abs(twos)) // 2 + 1):
                yield twos, d


def positive_twos_values(n: int) -> list[int]:
    """Positive twos values for the given ring size, ascending."""
    start = 2 if n % 2 == 0 else 1
    return list(range(start, n + 1, 2))


def r_weight(twos: int, n: int, beta_j: float) -> float:
    """log of the wall-summed Ising weight R(twos, n) at inverse coupling beta_j.

    Requires twos >= 0 (R is even in twos; thermal sums only need the
    nonnegative half).
    """
    _check_class_args(twos, n)
    if twos < 0:
        raise ValueError(f"r_weight expects twos >= 0, got {twos}")
    if twos == n:
        return beta_j * n / 2.0
    terms = [
        math.log(degeneracy(twos, d, n)) + beta_j * (n - 4 * d) / 2.0
        for d in range(1, (n - twos) // 2 + 1)
    ]
    return log_sum_exp(terms)


def r_hypergeometric(twos: int, n: int, beta_j: float) -> float:
    """R(twos, n) via the terminating Gauss series, as a plain float.

    Independent cross-check of r_weight for 0 <= twos < n.  All series
    terms are positive so there is no cancellation; the practical range
    is |beta_j| <~ 20 and n <= 64 before the prefactor saturates the
    float range.
    """
    _check_class_args(twos, n)
    if not 0 <= twos < n:
        raise ValueError(f"r_hypergeometric expects 0 <= twos < n, got twos={twos}")
    a = 1 - (n + twos) // 2
    b = 1 - (n - twos) // 2
    if a > 0 and b > 0:
        raise NonTerminatingError(
            f"series parameters a={a}, b={b} give a nonterminating sum")
    z = math.exp(-2.0 * beta_j)
    k_max = min(-a, -b)
    term = 1.0
    total = 1.0
    for k in range(k_max):
        term *= (a + k) * (b + k) * z / ((2 + k) * (1 + k))
        total += term
    return n * math.exp(beta_j * (n - 4) / 2.0) * total
