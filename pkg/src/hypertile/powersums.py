"""Exact big-integer checks of the base square/cube identities and the
general Faulhaber-style power-sum identities for higher exponents.

Half-integer coefficients are cleared by doubling both sides, so every
check is a pure integer equality.
"""

from __future__ import annotations

from math import comb

from .report import Report


def sigma(p: int, n: int) -> int:
    """``1^p + 2^p + ... + n^p`` as an exact integer."""
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return sum(k**p for k in range(1, n + 1))


def verify_base(n: int) -> Report:
    """The square and cube sums in cleared form: ``6 sigma_2 = n(n+1)(2n+1)``
    and ``4 sigma_3 = n^2 (n+1)^2``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    report = Report("base_power_sums", n)
    report.check_equal(6 * sigma(2, n), n * (n + 1) * (2 * n + 1), "square sum")
    report.check_equal(4 * sigma(3, n), n * n * (n + 1) * (n + 1), "cube sum")
    return report


def verify_beardon(p: int, n: int) -> Report:
    """The general power-sum identity at exponent p, checked exactly.

    Odd p:  ``n^h (n+1)^h = sum over odd r <= h of 2 C(h, r) sigma_{p+1-r}``
    with ``h = (p+1)/2``.  Even p, doubled through to clear the half:
    ``(2n+1) n^h (n+1)^h = sum over odd r <= h of 4 C(h, r) sigma_{p+1-r}
    + sum over even r <= h of 2 C(h, r) sigma_{p-r}`` with ``h = p/2``.
    """
    if p < 3:
        raise ValueError(f"p must be >= 3, got {p}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    report = Report(f"power_sum_identity_p{p}", n)
    if p % 2 == 1:
        h = (p + 1) // 2
        lhs = n**h * (n + 1) ** h
        rhs = sum(2 * comb(h, r) * sigma(p + 1 - r, n) for r in range(1, h + 1, 2))
        report.check_equal(lhs, rhs, f"odd identity p={p}")
    else:
        h = p // 2
        lhs = (2 * n + 1) * n**h * (n + 1) ** h
        rhs = sum(
            4 * comb(h, r) * sigma(p + 1 - r, n) for r in range(1, h + 1, 2)
        ) + sum(2 * comb(h, r) * sigma(p - r, n) for r in range(0, h + 1, 2))
        report.check_equal(lhs, rhs, f"doubled even identity p={p}")
    return report
