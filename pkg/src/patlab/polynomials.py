"""
Exact sparse polynomials and truncated exponential generating functions.

Coefficients are Python ints or ``fractions.Fraction`` (never floats), so
every operation in this module is exact.  Three shapes of value live here:

- ``YPoly``: a polynomial in the single variable y, stored as a sparse map
  from exponent to coefficient.  Fraction coefficients are allowed as
  intermediates; the boundary helpers ``is_integral`` / ``to_int_coeffs``
  enforce that results handed to callers have integer coefficients.
- ``XYPoly``: a polynomial in x and y, keyed by (x-exponent, y-exponent).
- ``EgfSeries``: a truncated series sum(a_n * t^n, n <= order) whose
  coefficients a_n are YPoly values over exact rationals.  The truncation
  order is part of the value; combining series of different orders is an
  error rather than a silent truncation.

The series operations are the standard coefficient recurrences: Cauchy
product, reciprocal of a series with constant term 1, logarithm via
L' = f'/f, and the x-th power expansion exp(x * log f) collected as
polynomials in x.
"""
from __future__ import annotations

import json
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class ConsistencyError(RuntimeError):
    """Two computations that must agree exactly did not.

    Raised when an internal cross-check fails: a rational coefficient that
    must clear to an integer does not, or two independent routes to the same
    integer disagree.  Either signals an upstream bug or inconsistent input,
    never a tolerance issue.
    """


def _norm(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class YPoly:
    """Sparse exact polynomial in y.  Immutable; zero coefficients are never stored."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Union[Mapping[int, Scalar], Iterable[tuple[int, Scalar]]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, Scalar] = {}
        for e, v in items:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponent must be a nonnegative int, got {e!r}")
            v = _norm(c.get(e, 0) + v)
            if v:
                c[e] = v
            else:
                c.pop(e, None)
        self._c = c

    @classmethod
    def zero(cls) -> YPoly:
        return cls()

    @classmethod
    def one(cls) -> YPoly:
        return cls({0: 1})

    @classmethod
    def term(cls, coeff: Scalar, exp: int) -> YPoly:
        return cls({exp: coeff})

    def items(self) -> list[tuple[int, Scalar]]:
        """Terms as (exponent, coefficient), ascending by exponent."""
        return sorted(self._c.items())

    def coeff(self, exp: int) -> Scalar:
        return self._c.get(exp, 0)

    def degree(self) -> int:
        """Degree in y; -1 for the zero polynomial."""
        return max(self._c) if self._c else -1

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, YPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: YPoly) -> YPoly:
        if not isinstance(other, YPoly):
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            w = _norm(c.get(e, 0) + v)
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        out = YPoly.__new__(YPoly)
        out._c = c
        return out

    def __neg__(self) -> YPoly:
        out = YPoly.__new__(YPoly)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __sub__(self, other: YPoly) -> YPoly:
        return self + (-other)

    def __mul__(self, other: Union[YPoly, Scalar]) -> YPoly:
        if isinstance(other, YPoly):
            c: dict[int, Scalar] = {}
            for e1, v1 in self._c.items():
                for e2, v2 in other._c.items():
                    e = e1 + e2
                    w = _norm(c.get(e, 0) + v1 * v2)
                    if w:
                        c[e] = w
                    else:
                        c.pop(e, None)
            out = YPoly.__new__(YPoly)
            out._c = c
            return out
        if isinstance(other, (int, Fraction)):
            if not other:
                return YPoly.zero()
            out = YPoly.__new__(YPoly)
            out._c = {e: _norm(v * other) for e, v in self._c.items()}
            return out
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, k: int) -> YPoly:
        """Multiply by y^k."""
        out = YPoly.__new__(YPoly)
        out._c = {e + k: v for e, v in self._c.items()}
        return out

    def evaluate(self, y: Scalar) -> Scalar:
        return _norm(sum((v * y**e for e, v in self._c.items()), 0))

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self._c.values())

    def to_int_coeffs(self) -> YPoly:
        """Return self with int coefficients; ConsistencyError if any is fractional."""
        if not self.is_integral():
            bad = [(e, v) for e, v in self.items() if not isinstance(v, int)]
            raise ConsistencyError(f"polynomial has non-integer coefficients: {bad}")
        return self

    def to_text(self) -> str:
        """Ascending-power rendering, e.g. '-y + 4y^2 - 4y^3'."""
        if not self._c:
            return "0"
        parts = []
        for e, v in self.items():
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                var = "y" if e == 1 else f"y^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(("-" if v < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json_obj(self) -> dict:
        """JSON encoding: {"vars": ["y"], "terms": [[exp, "coeff"], ...]} sorted by exponent."""
        return {"vars": ["y"], "terms": [[e, str(v)] for e, v in self.items()]}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> YPoly:
        if obj.get("vars") != ["y"]:
            raise ValueError(f"expected vars ['y'], got {obj.get('vars')!r}")
        return cls((int(e), int(v)) for e, v in obj["terms"])

    def __repr__(self) -> str:
        return f"YPoly({self.to_text()})"


Y = YPoly.term(1, 1)
ONE_MINUS_Y = YPoly.one() - Y


class XYPoly:
    """Sparse exact polynomial in x and y, keyed by (x-exponent, y-exponent)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Union[Mapping[tuple[int, int], Scalar],
                                     Iterable[tuple[tuple[int, int], Scalar]]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[tuple[int, int], Scalar] = {}
        for key, v in items:
            xe, ye = key
            if xe < 0 or ye < 0:
                raise ValueError(f"exponents must be nonnegative, got {key!r}")
            v = _norm(c.get(key, 0) + v)
            if v:
                c[key] = v
            else:
                c.pop(key, None)
        self._c = c

    @classmethod
    def zero(cls) -> XYPoly:
        return cls()

    @classmethod
    def one(cls) -> XYPoly:
        return cls({(0, 0): 1})

    @classmethod
    def term(cls, coeff: Scalar, xexp: int, yexp: int) -> XYPoly:
        return cls({(xexp, yexp): coeff})

    def items(self) -> list[tuple[tuple[int, int], Scalar]]:
        """Terms keyed (x-exponent, y-exponent), sorted lexicographically by key."""
        return sorted(self._c.items())

    def coeff(self, xexp: int, yexp: int) -> Scalar:
        return self._c.get((xexp, yexp), 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, XYPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: XYPoly) -> XYPoly:
        if not isinstance(other, XYPoly):
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            w = _norm(c.get(k, 0) + v)
            if w:
                c[k] = w
            else:
                c.pop(k, None)
        out = XYPoly.__new__(XYPoly)
        out._c = c
        return out

    def __neg__(self) -> XYPoly:
        out = XYPoly.__new__(XYPoly)
        out._c = {k: -v for k, v in self._c.items()}
        return out

    def __sub__(self, other: XYPoly) -> XYPoly:
        return self + (-other)

    def __mul__(self, other: Scalar) -> XYPoly:
        if isinstance(other, (int, Fraction)):
            if not other:
                return XYPoly.zero()
            out = XYPoly.__new__(XYPoly)
            out._c = {k: _norm(v * other) for k, v in self._c.items()}
            return out
        return NotImplemented

    __rmul__ = __mul__

    def at_x(self, x: Scalar = 1) -> YPoly:
        """Substitute a value for x, leaving a polynomial in y."""
        return YPoly((ye, v * x**xe) for (xe, ye), v in self._c.items())

    def evaluate(self, x: Scalar, y: Scalar) -> Scalar:
        return _norm(sum((v * x**xe * y**ye for (xe, ye), v in self._c.items()), 0))

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self._c.values())

    def to_int_coeffs(self) -> XYPoly:
        if not self.is_integral():
            bad = [(k, v) for k, v in self.items() if not isinstance(v, int)]
            raise ConsistencyError(f"polynomial has non-integer coefficients: {bad}")
        return self

    def to_text(self) -> str:
        """Rendering in table order (ascending y-exponent, then x-exponent): 'x y + 4 x y^2 + ...'."""
        if not self._c:
            return "0"
        parts = []
        for (xe, ye), v in sorted(self._c.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            mag = abs(v)
            factors = []
            if mag != 1 or (xe == 0 and ye == 0):
                factors.append(str(mag))
            if xe:
                factors.append("x" if xe == 1 else f"x^{xe}")
            if ye:
                factors.append("y" if ye == 1 else f"y^{ye}")
            parts.append(("-" if v < 0 else "+", " ".join(factors)))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json_obj(self) -> dict:
        """JSON encoding: {"vars": ["x","y"], "terms": [[xexp, yexp, "coeff"], ...]}
        with terms sorted lexicographically by (xexp, yexp)."""
        return {"vars": ["x", "y"],
                "terms": [[xe, ye, str(v)] for (xe, ye), v in self.items()]}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> XYPoly:
        if obj.get("vars") != ["x", "y"]:
            raise ValueError(f"expected vars ['x','y'], got {obj.get('vars')!r}")
        return cls(((int(xe), int(ye)), int(v)) for xe, ye, v in obj["terms"])

    def __repr__(self) -> str:
        return f"XYPoly({self.to_text()})"


def poly_to_json(p: Union[YPoly, XYPoly]) -> str:
    return json.dumps(p.to_json_obj(), separators=(",", ":"))


def poly_from_json(text: str) -> Union[YPoly, XYPoly]:
    obj = json.loads(text)
    if obj.get("vars") == ["y"]:
        return YPoly.from_json_obj(obj)
    return XYPoly.from_json_obj(obj)


class EgfSeries:
    """Truncated series sum(a_n t^n, 0 <= n <= order) with YPoly coefficients."""

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms: Sequence[Union[YPoly, Scalar]]):
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(terms) != order + 1:
            raise ValueError(f"need {order + 1} coefficients for order {order}, got {len(terms)}")
        self.order = order
        self.terms = tuple(t if isinstance(t, YPoly) else YPoly.term(t, 0) for t in terms)

    @classmethod
    def zero(cls, order: int) -> EgfSeries:
        return cls(order, [YPoly.zero()] * (order + 1))

    @classmethod
    def one(cls, order: int) -> EgfSeries:
        return cls(order, [YPoly.one()] + [YPoly.zero()] * order)

    @classmethod
    def egf(cls, polys: Sequence[YPoly], order: int) -> EgfSeries:
        """Series with a_n = polys[n] / n!  (an exponential generating function)."""
        if len(polys) < order + 1:
            raise ValueError(f"need coefficient polynomials up to n={order}")
        return cls(order, [polys[n] * Fraction(1, factorial(n)) for n in range(order + 1)])

    def egf_coefficient(self, n: int) -> YPoly:
        """n! times the t^n coefficient."""
        return self.terms[n] * factorial(n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EgfSeries):
            return self.order == other.order and self.terms == other.terms
        return NotImplemented

    def __repr__(self) -> str:
        inner = ", ".join(t.to_text() for t in self.terms)
        return f"EgfSeries(order={self.order}; {inner})"


def series_mul(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    """Cauchy product truncated at the common order.  Mixing orders is an error."""
    if f.order != g.order:
        raise ValueError(f"series order mismatch: {f.order} != {g.order}")
    n = f.order
    out = []
    for k in range(n + 1):
        acc = YPoly.zero()
        for i in range(k + 1):
            if f.terms[i] and g.terms[k - i]:
                acc = acc + f.terms[i] * g.terms[k - i]
        out.append(acc)
    return EgfSeries(n, out)


def series_reciprocal(f: EgfSeries) -> EgfSeries:
    """Multiplicative inverse; requires constant term exactly 1.

    Uses the recurrence g_0 = 1, g_n = -sum(f_k g_{n-k}, k=1..n).
    """
    if f.terms[0] != YPoly.one():
        raise ValueError("series_reciprocal requires constant term 1")
    g: list[YPoly] = [YPoly.one()]
    for n in range(1, f.order + 1):
        acc = YPoly.zero()
        for k in range(1, n + 1):
            if f.terms[k] and g[n - k]:
                acc = acc + f.terms[k] * g[n - k]
        g.append(-acc)
    return EgfSeries(f.order, g)


def series_log(f: EgfSeries) -> EgfSeries:
    """Formal logarithm; requires constant term exactly 1.

    From f' = L' f: n f_n = sum(k L_k f_{n-k}, k=1..n), solved for L_n.
    """
    if f.terms[0] != YPoly.one():
        raise ValueError("series_log requires constant term 1")
    L: list[YPoly] = [YPoly.zero()]
    for n in range(1, f.order + 1):
        acc = f.terms[n] * n
        for k in range(1, n):
            if L[k] and f.terms[n - k]:
                acc = acc - (L[k] * k) * f.terms[n - k]
        L.append(acc * Fraction(1, n))
    return EgfSeries(f.order, L)


def exp_x(L: EgfSeries, upto: int) -> list[XYPoly]:
    """Expand exp(x*L) and clear factorials: entry n is n! [t^n] exp(x L).

    The x-degree-k part of [t^n] exp(x L) is [t^n] L^k / k!, so entry n is
    sum over k of (n!/k!) [t^n] L^k as the coefficient of x^k.  Requires
    L_0 = 0; every final coefficient must clear to an integer, otherwise a
    ConsistencyError is raised (an upstream inconsistency, not a rounding
    problem -- all arithmetic here is exact).
    """
    if L.terms[0]:
        raise ValueError("exp_x requires zero constant term")
    if upto > L.order:
        raise ValueError(f"requested order {upto} exceeds series order {L.order}")
    acc: list[dict[int, YPoly]] = [dict() for _ in range(upto + 1)]
    power = EgfSeries.one(L.order)
    for k in range(1, upto + 1):
        power = series_mul(power, L)
        for n in range(k, upto + 1):
            p = power.terms[n]
            if p:
                acc[n][k] = p * Fraction(factorial(n), factorial(k))
    out = [XYPoly.one()]
    for n in range(1, upto + 1):
        terms: list[tuple[tuple[int, int], Scalar]] = []
        for k, poly in acc[n].items():
            for ye, v in poly.items():
                terms.append(((k, ye), v))
        out.append(XYPoly(terms).to_int_coeffs())
    return out


def series_terms_iter(f: EgfSeries) -> Iterator[tuple[int, YPoly]]:
    return iter(enumerate(f.terms))
