"""Closed-form quantities for crown and Kneser graphs.

All probabilities are exact :class:`fractions.Fraction` values.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .graph import GraphError


def crown_b2_pmf(n: int) -> dict[int, Fraction]:
    """Law of the colour count for a crown graph in alternate order, buffer 2.

    Pr(C = k) = 2^-(k-1) for 2 <= k < n and 2^-(n-2) for k = n.
    """
    if n < 2:
        raise ValueError(f"crown_b2_pmf needs n >= 2, got {n}")
    pmf = {k: Fraction(1, 2 ** (k - 1)) for k in range(2, n)}
    pmf[n] = Fraction(1, 2 ** (n - 2))
    return pmf


def crown_b2_mean(n: int) -> Fraction:
    """Expected colour count, summed directly over :func:`crown_b2_pmf`."""
    return sum((k * p for k, p in crown_b2_pmf(n).items()), Fraction(0))


def crown_b2_mean_printed(n: int) -> Fraction:
    """The closed form 3 - 2^-n as printed in the source (disagrees with the pmf)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return 3 - Fraction(1, 2**n)


def crown_b2_mean_closed(n: int) -> Fraction:
    """3 - 2^-(n-2), the value the pmf actually sums to."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return 3 - Fraction(1, 2 ** (n - 2))


def crown_b2_tail(n: int, m: int) -> Fraction:
    """Pr(C >= m) = 2^-(m-2) for 2 <= m <= n."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 2 <= m <= n:
        raise ValueError(f"tail needs 2 <= m <= n, got m={m}, n={n}")
    return Fraction(1, 2 ** (m - 2))


def kneser_chromatic(n: int, k: int) -> int:
    """Chromatic number of K(n, k): n - 2k + 2, or 1 when the graph is edgeless."""
    if n < 1 or k < 1:
        raise GraphError(f"kneser parameters must be >= 1, got ({n}, {k})")
    if k > n:
        raise GraphError(f"kneser graph needs k <= n, got ({n}, {k})")
    if 2 * k > n:
        return 1
    return n - 2 * k + 2


def performance_ratio(alg_colours: int, chi: int) -> Fraction:
    if chi < 1:
        raise ValueError(f"chromatic number must be >= 1, got {chi}")
    if alg_colours < chi:
        raise ValueError(f"an algorithm cannot beat the chromatic number ({alg_colours} < {chi})")
    return Fraction(alg_colours, chi)


def class_performance_ratio(pairs) -> Fraction:
    """Maximum of ``performance_ratio`` over ``(alg_colours, chi)`` pairs."""
    return max(performance_ratio(a, c) for a, c in pairs)


def iterated_log2(n: int) -> int:
    """Number of log2 applications needed to bring n down to at most 1.

    Powers of two take exact integer logarithms, so 2**m steps to m.
    """
    if n < 1:
        raise ValueError(f"iterated_log2 needs n >= 1, got {n}")
    count = 0
    x: float | int = n
    while x > 1:
        x = math.log2(x) if not isinstance(x, int) else _exact_log2(x)
        count += 1
    return count


def _exact_log2(x: int) -> float | int:
    if x & (x - 1) == 0:
        return x.bit_length() - 1
    return math.log2(x)


def bipartite_online_bound(n: int) -> int:
    """The 2 * log*_2(n) colour bound for online bipartite colouring."""
    return 2 * iterated_log2(n)
