"""Truncated power and Laurent series in one variable over an exact ring.

A series knows its coefficients for exponents ``low <= n < order``; nothing
is claimed at or beyond ``order``. The coefficient ring is anything with
``+``, ``-``, ``*``, multiplication by ``Fraction`` and ``== 0``: Fraction,
CyclotomicNumber, complex, or another TruncatedSeries in a different
variable. The variable tag tells a Cauchy product (same tag) apart from
scalar multiplication (anything else), which is what makes z-series over
q-series work.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "TruncatedSeries",
    "SeriesError",
    "series_product",
    "series_derivative_z",
    "series_equal_to_order",
    "series_to_json",
    "series_from_json",
]


class SeriesError(ValueError):
    pass


def _is_zero(c) -> bool:
    return c == 0


class TruncatedSeries:
    __slots__ = ("var", "low", "order", "coeffs", "zero")

    def __init__(self, coeffs, low: int = 0, order: int | None = None, var: str = "q", zero=0):
        coeffs = list(coeffs)
        if order is None:
            order = low + len(coeffs)
        if order < low:
            raise SeriesError(f"truncation order {order} below lowest exponent {low}")
        n = order - low
        if len(coeffs) > n:
            coeffs = coeffs[:n]
        elif len(coeffs) < n:
            coeffs += [zero] * (n - len(coeffs))
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "zero", zero)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def constant(cls, c, order: int, var: str = "q", zero=0, low: int = 0):
        coeffs = [zero] * (order - low)
        if low <= 0 < order:
            coeffs[-low] = c
        return cls(coeffs, low, order, var, zero)

    @classmethod
    def monomial(cls, n: int, order: int, var: str = "q", c=1, zero=0):
        low = min(n, 0)
        coeffs = [zero] * (order - low)
        if n < order:
            coeffs[n - low] = c
        return cls(coeffs, low, order, var, zero)

    def __getitem__(self, n: int):
        if n >= self.order:
            raise SeriesError(f"coefficient of {self.var}^{n} is beyond truncation order {self.order}")
        if n < self.low:
            return self.zero
        return self.coeffs[n - self.low]

    def items(self):
        for i, c in enumerate(self.coeffs):
            yield self.low + i, c

    def valuation(self):
        for n, c in self.items():
            if not _is_zero(c):
                return n
        return None

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise SeriesError(f"cannot raise truncation order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: max(order - self.low, 0)], self.low, max(order, self.low), self.var, self.zero)

    def _same(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and other.var == self.var

    def __add__(self, other):
        if not self._same(other):
            return self._add_scalar(other)
        low = min(self.low, other.low)
        order = min(self.order, other.order)
        out = [self[n] + other[n] for n in range(low, order)] if order > low else []
        return TruncatedSeries(out, low, max(order, low), self.var, self.zero)

    __radd__ = __add__

    def _add_scalar(self, c):
        if _is_zero(c):
            return self
        if not self.low <= 0 < self.order:
            if self.order <= 0:
                return self
            # extend down to the constant term
            coeffs = [self.zero] * self.low + list(self.coeffs)
            coeffs[0] = coeffs[0] + c
            return TruncatedSeries(coeffs, 0, self.order, self.var, self.zero)
        coeffs = list(self.coeffs)
        coeffs[-self.low] = coeffs[-self.low] + c
        return TruncatedSeries(coeffs, self.low, self.order, self.var, self.zero)

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.low, self.order, self.var, self.zero)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if self._same(other):
            return series_product(self, other)
        return TruncatedSeries([c * other for c in self.coeffs], self.low, self.order, self.var, self.zero)

    def __rmul__(self, other):
        if self._same(other):
            return series_product(other, self)
        return TruncatedSeries([other * c for c in self.coeffs], self.low, self.order, self.var, self.zero)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        if n == 0:
            return TruncatedSeries.constant(1, self.order, self.var, self.zero)
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            if other.var != self.var:
                return False
            m = min(self.order, other.order)
            lo = min(self.low, other.low)
            return all(self[n] == other[n] for n in range(lo, m))
        if _is_zero(other):
            return self.is_zero()
        return (self - other).is_zero()

    __hash__ = None

    def derivative(self) -> TruncatedSeries:
        return series_derivative_z(self, check_var=False)

    def negate_variable(self) -> TruncatedSeries:
        """f(x) -> f(-x)."""
        return TruncatedSeries(
            [c if (self.low + i) % 2 == 0 else -c for i, c in enumerate(self.coeffs)],
            self.low, self.order, self.var, self.zero,
        )

    def map(self, fn, zero=None) -> TruncatedSeries:
        return TruncatedSeries([fn(c) for c in self.coeffs], self.low, self.order, self.var,
                               fn(self.zero) if zero is None else zero)

    def evaluate(self, x):
        """Sum of the known terms at a numerical value of the variable."""
        total = 0
        for n, c in self.items():
            if not _is_zero(c):
                total += complex(c) * x ** n
        return total

    def __repr__(self):
        return f"TruncatedSeries(var={self.var!r}, low={self.low}, order={self.order}, coeffs={list(self.coeffs)!r})"

    def __str__(self):
        terms = [f"({c})*{self.var}^{n}" for n, c in self.items() if not _is_zero(c)]
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O({self.var}^{self.order})"


def series_product(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product with pessimistic truncation."""
    if not isinstance(f, TruncatedSeries) or not isinstance(g, TruncatedSeries):
        raise SeriesError("series_product needs two series")
    if f.var != g.var:
        raise SeriesError(f"mismatched series variables {f.var!r} and {g.var!r}")
    low = f.low + g.low
    order = min(f.order + g.low, g.order + f.low)
    n = order - low
    out = [None] * max(n, 0)
    gc = [(j, c) for j, c in enumerate(g.coeffs) if not _is_zero(c)]
    for i, a in enumerate(f.coeffs):
        if i >= n or _is_zero(a):
            continue
        for j, b in gc:
            k = i + j
            if k >= n:
                break
            t = a * b
            out[k] = t if out[k] is None else out[k] + t
    zero = f.zero
    return TruncatedSeries([zero if c is None else c for c in out], low, max(order, low), f.var, zero)


def series_derivative_z(f: TruncatedSeries, check_var: bool = True) -> TruncatedSeries:
    """Term-wise derivative; the truncation order drops by one."""
    if check_var and f.var != "z":
        raise SeriesError(f"derivative is taken in z, got a series in {f.var!r}")
    coeffs = [c * (f.low + i) if f.low + i else f.zero for i, c in enumerate(f.coeffs)]
    return TruncatedSeries(coeffs[1:] if f.low == 0 else coeffs, f.low if f.low == 0 else f.low - 1,
                           f.order - 1, f.var, f.zero)


def series_equal_to_order(f: TruncatedSeries, g: TruncatedSeries, M: int) -> bool:
    if M > f.order or M > g.order:
        raise SeriesError(f"cannot compare to order {M}: truncation orders are {f.order} and {g.order}")
    if f.var != g.var:
        raise SeriesError("mismatched series variables")
    return all(f[n] == g[n] for n in range(min(f.low, g.low), M))


def series_to_json(f: TruncatedSeries, encode=None) -> dict:
    encode = encode or _default_encode
    return {"var": f.var, "low": f.low, "order": f.order, "coeffs": [encode(c) for c in f.coeffs]}


def series_from_json(obj: dict, decode=None, zero=0) -> TruncatedSeries:
    decode = decode or _default_decode
    return TruncatedSeries([decode(c) for c in obj["coeffs"]], int(obj["low"]), int(obj["order"]),
                           obj["var"], zero)


def _default_encode(c):
    from .cyclotomic import CyclotomicNumber, cyclo_to_json

    if isinstance(c, CyclotomicNumber):
        return cyclo_to_json(c)
    if isinstance(c, TruncatedSeries):
        return series_to_json(c)
    c = Fraction(c)
    return [str(c.numerator), str(c.denominator)]


def _default_decode(obj):
    from .cyclotomic import cyclo_from_json

    if isinstance(obj, dict) and "coords" in obj:
        return cyclo_from_json(obj)
    if isinstance(obj, dict) and "var" in obj:
        return series_from_json(obj)
    return Fraction(int(obj[0]), int(obj[1]))
