"""
The three-way pipeline between avoider polynomials and their reciprocal family.

Write F(t) = 1 + sum(NM_n(1,y) t^n / n!) for the exponential generating
function of the match-free permutations weighted by y^(1+des).  When every
forbidden pattern starts with 1, the full two-variable generating function
factors as F_{x}(t) = (1/U(t,y))^x where U = 1/F, so the coefficient
polynomials u_n(y) := n! [t^n] U determine everything.  This module
computes the u_n two independent ways and inverts them back:

- ``u_from_bruteforce``: enumerate avoiders, build F, take the reciprocal.
- ``u_via_brick_sum``: the combinatorial expansion
  u_n = sum over compositions (b_1..b_k) of n of
        (-1)^k * multinomial(n; b_1..b_k) * prod NM_{b_i}(1,y),
  which visits exactly 2^(n-1) compositions.
- ``nm_from_u``: recover the two-variable polynomials n! [t^n] (1/U)^x,
  whose coefficients must clear to integers exactly.
"""
from __future__ import annotations

from math import factorial
from typing import Sequence

from .permutations import PatternSet, max_enum_bound, nm_polynomial
from .polynomials import (
    EgfSeries,
    XYPoly,
    YPoly,
    exp_x,
    series_log,
    series_reciprocal,
)
from .tabloids import compositions


def nm_y_values(g: PatternSet, upto: int, method: str = "auto") -> list[YPoly]:
    """[1, NM_1(1,y), ..., NM_upto(1,y)] by direct enumeration."""
    return [YPoly.one()] + [nm_polynomial(n, g, method=method).at_x(1) for n in range(1, upto + 1)]


def u_from_bruteforce(g: PatternSet, upto: int, method: str = "auto") -> list[YPoly]:
    """[1, u_1(y), ..., u_upto(y)] via enumeration plus series reciprocal.

    Requires every pattern to start with 1 (otherwise the x-th power
    factorization behind the u_n does not hold, and the output would be
    meaningless); requires upto within the brute-force guard, overridable
    through PATLAB_MAX_ENUM.
    """
    if not g.starts_with_one:
        raise ValueError(
            "u polynomials are only defined when every pattern starts with 1; "
            f"got {g.to_text()} (the x-power factorization needs it)")
    bound = max_enum_bound()
    if upto > bound:
        raise ValueError(
            f"brute-force enumeration requested through n={upto}, above the guard {bound}; "
            "set PATLAB_MAX_ENUM or use a recursion family instead")
    nm = nm_y_values(g, upto, method=method)
    f = EgfSeries.egf(nm, upto)
    rec = series_reciprocal(f)
    return [rec.egf_coefficient(n).to_int_coeffs() for n in range(upto + 1)]


def multinomial(n: int, parts: Sequence[int]) -> int:
    out = factorial(n)
    for b in parts:
        out //= factorial(b)
    return out


def u_via_brick_sum(g: PatternSet, n: int, nm: Sequence[YPoly] | None = None) -> YPoly:
    """u_n(y) by the signed composition sum over brick tabloids.

    ``nm`` may supply precomputed [1, NM_1(1,y), ...] to avoid re-enumeration.
    """
    if n < 1:
        raise ValueError("u_via_brick_sum requires n >= 1")
    if nm is None:
        nm = nm_y_values(g, n)
    total = YPoly.zero()
    for comp in compositions(n):
        term = YPoly.term(multinomial(n, comp) * (-1) ** len(comp), 0)
        for b in comp:
            term = term * nm[b]
        total = total + term
    return total.to_int_coeffs()


def nm_from_u(u: Sequence[YPoly], upto: int) -> list[XYPoly]:
    """[1, NM_1(x,y), ..., NM_upto(x,y)] from the u polynomials.

    u[0] must be the constant 1; u[n] is u_n(y).  Expands (1/U)^x through
    exp(x log(1/U)) and clears the factorials; any rational residue raises.
    """
    if len(u) < upto + 1:
        raise ValueError(f"need u polynomials through n={upto}, got {len(u) - 1}")
    if u[0] != YPoly.one():
        raise ValueError("u[0] must be the constant polynomial 1")
    useries = EgfSeries.egf(list(u[:upto + 1]), upto)
    log_recip = series_log(series_reciprocal(useries))
    return exp_x(log_recip, upto)
