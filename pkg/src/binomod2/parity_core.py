"""Scalar parity kernels for binomial coefficients and their bilinear products.

Everything here works on arbitrary-precision integers. The central fact:
C(n, k) is odd exactly when every 1-bit of k is also set in n. Products of
binomials are odd exactly when every factor is, which collapses to a single
bitmask test per factor.
"""

from __future__ import annotations

from collections.abc import Iterable

from .errors import BoundExceeded

Coeffs = tuple[int, int, int, int]

# sum_direct is Theta(n); beyond this it is the wrong tool and callers
# should evaluate through a rule system instead.
DEFAULT_ORACLE_BOUND = 1 << 24


def binom_parity(n: int, k: int) -> int:
    """Parity of C(n, k): 1 iff k is a bitwise submask of n.

    Covers k > n for free (the highest differing bit of k is then not in n)
    and treats negative arguments as a zero binomial.
    """
    if n < 0 or k < 0:
        return 0
    return 1 if k & ~n == 0 else 0


def product_parity(pairs: Iterable[tuple[int, int]]) -> int:
    """Parity of prod C(n_a, k_a): odd iff every factor is odd. Empty -> 1."""
    for n, k in pairs:
        if binom_parity(n, k) == 0:
            return 0
    return 1


def g_value(c: Coeffs, n: int, k: int) -> int | None:
    """Obstruction mask for C(a1*n+a2*k, a3*n+a4*k) * C(n, k) being odd.

    Returns (bot AND-NOT top) OR (k AND-NOT n), which is zero exactly when
    both factors are odd. Returns None when top or bot is negative: the
    binomial is zero by convention there and no mask applies.
    """
    a1, a2, a3, a4 = c
    top = a1 * n + a2 * k
    bot = a3 * n + a4 * k
    if top < 0 or bot < 0:
        return None
    return (bot & ~top) | (k & ~n)


def f_value(c: Coeffs, n: int, k: int) -> int:
    """Parity of C(a1*n+a2*k, a3*n+a4*k) * C(n, k); 0 outside 0 <= k <= n."""
    if k > n or k < 0:
        return 0
    g = g_value(c, n, k)
    if g is None:
        return 0
    return 1 if g == 0 else 0


def sum_direct(c: Coeffs, n: int, oracle_bound: int = DEFAULT_ORACLE_BOUND) -> int:
    """Row sum a(n) = sum_{k=0..n} f_value(c, n, k), by brute force.

    Deliberately the dumb Theta(n) reference implementation; it anchors every
    faster route. Raises BoundExceeded above oracle_bound.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > oracle_bound:
        raise BoundExceeded(f"n={n} exceeds oracle bound {oracle_bound}")
    return sum(f_value(c, n, k) for k in range(n + 1))
