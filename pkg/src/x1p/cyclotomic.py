"""Exact arithmetic in the cyclotomic field Q(zeta_p).

Elements are stored on the power basis 1, zeta, ..., zeta^(p-2) as integer
numerators over one positive common denominator; the coordinate of
zeta^(p-1) is always eliminated with 1 + zeta + ... + zeta^(p-1) = 0.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "Level",
    "CyclotomicNumber",
    "cyclo_power",
    "cyclo_inv",
    "galois_apply",
    "to_complex",
    "cyclo_to_json",
    "cyclo_from_json",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Level:
    """An odd prime level p >= 5."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if isinstance(p, Level):
            p = p.p
        if not isinstance(p, int) or isinstance(p, bool):
            raise TypeError(f"level must be an integer, got {p!r}")
        if p < 5 or not _is_prime(p):
            raise ValueError(f"level must be a prime >= 5, got {p}")
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Level is immutable")

    @property
    def m(self) -> int:
        """Number of reduced indices, (p - 1) / 2."""
        return (self.p - 1) // 2

    def units(self) -> range:
        return range(1, self.p)

    def __eq__(self, other):
        return isinstance(other, Level) and other.p == self.p

    def __hash__(self):
        return hash(("Level", self.p))

    def __int__(self):
        return self.p

    def __repr__(self):
        return f"Level({self.p})"


def as_level(p) -> Level:
    return p if isinstance(p, Level) else Level(p)


class CyclotomicNumber:
    """Immutable element of Q(zeta_p) in canonical coordinates."""

    __slots__ = ("p", "_num", "_den", "_hash")

    def __init__(self, p, coords=None):
        p = as_level(p).p
        if coords is None:
            coords = ()
        coords = [Fraction(c) for c in coords]
        if len(coords) > p - 1:
            raise ValueError("too many coordinates for the power basis")
        den = 1
        for c in coords:
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = [int(c * den) for c in coords] + [0] * (p - 1 - len(coords))
        self._set(p, num, den)

    def _set(self, p, num, den):
        g = den
        for x in num:
            if g == 1:
                break
            g = math.gcd(g, x)
        if g != 1:
            num = [x // g for x in num]
            den //= g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "_num", tuple(num))
        object.__setattr__(self, "_den", den)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, p, num, den):
        # num has length p-1 (canonical) or p (zeta^(p-1) still present)
        if len(num) == p:
            top = num[-1]
            num = [x - top for x in num[:-1]] if top else list(num[:-1])
        if den < 0:
            num = [-x for x in num]
            den = -den
        obj = cls.__new__(cls)
        obj._set(p, num, den)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    # construction helpers
    @classmethod
    def rational(cls, p, value) -> CyclotomicNumber:
        value = Fraction(value)
        p = as_level(p).p
        return cls._raw(p, [value.numerator] + [0] * (p - 2), value.denominator)

    @classmethod
    def zero(cls, p) -> CyclotomicNumber:
        return cls.rational(p, 0)

    @classmethod
    def one(cls, p) -> CyclotomicNumber:
        return cls.rational(p, 1)

    @property
    def level(self) -> Level:
        return Level(self.p)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._den) for x in self._num)

    def full_coords(self) -> list[Fraction]:
        """Coordinates on 1, zeta, ..., zeta^(p-1) with the last one zero."""
        return list(self.coords) + [Fraction(0)]

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self._num[0], self._den)

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self):
        return not self.is_zero()

    # coercion
    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.p != self.p:
                raise ValueError(f"mixing levels {self.p} and {other.p}")
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return CyclotomicNumber.rational(self.p, other)
        return None

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, bool) else None
        if o is None:
            return NotImplemented
        return self._den == o._den and self._num == o._num

    def __hash__(self):
        if self._hash is None:
            h = hash(self.rational_value()) if self.is_rational() else hash((self.p, self._num, self._den))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __neg__(self):
        return CyclotomicNumber._raw(self.p, [-x for x in self._num], self._den)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, (float, complex)):
            return to_complex(self) + other
        if isinstance(other, (int, Rational)) and not isinstance(other, CyclotomicNumber):
            other = Fraction(other)
            num = list(self._num)
            d = self._den * other.denominator
            num = [x * other.denominator for x in num]
            num[0] += other.numerator * self._den
            return CyclotomicNumber._raw(self.p, num, d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            return CyclotomicNumber._raw(self.p, [x + y for x, y in zip(self._num, o._num)], self._den)
        a, b = self._den, o._den
        return CyclotomicNumber._raw(self.p, [x * b + y * a for x, y in zip(self._num, o._num)], a * b)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (float, complex)):
            return to_complex(self) - other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        if isinstance(other, (float, complex)):
            return other - to_complex(self)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (float, complex)):
            return to_complex(self) * other
        if isinstance(other, (int, Rational)) and not isinstance(other, CyclotomicNumber):
            other = Fraction(other)
            return CyclotomicNumber._raw(
                self.p, [x * other.numerator for x in self._num], self._den * other.denominator
            )
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p
        out = [0] * p
        b = o._num
        nz_b = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(self._num):
            if not x:
                continue
            for j, y in nz_b:
                k = i + j
                if k >= p:
                    k -= p
                out[k] += x * y
        return CyclotomicNumber._raw(p, out, self._den * o._den)

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        return cyclo_inv(self)

    def __truediv__(self, other):
        if isinstance(other, (float, complex)):
            return to_complex(self) / other
        if isinstance(other, (int, Rational)) and not isinstance(other, CyclotomicNumber):
            other = Fraction(other)
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(zeta_p)")
            return self * (1 / other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * cyclo_inv(o)

    def __rtruediv__(self, other):
        if isinstance(other, (float, complex)):
            return other / to_complex(self)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * cyclo_inv(self)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return cyclo_inv(self) ** (-n)
        result = CyclotomicNumber.one(self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> CyclotomicNumber:
        return galois_apply(self, -1)

    def __complex__(self):
        return to_complex(self)

    def __repr__(self):
        return f"CyclotomicNumber({self.p}, {self})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "z" if k == 1 else f"z^{k}"
                terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"({c})*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def cyclo_power(lvl, k: int) -> CyclotomicNumber:
    """zeta^(k mod p) in canonical form."""
    return _power(as_level(lvl).p, k % as_level(lvl).p)


@lru_cache(maxsize=None)
def _power(p: int, k: int) -> CyclotomicNumber:
    num = [0] * p
    num[k] = 1
    return CyclotomicNumber._raw(p, num, 1)


# polynomial helpers over Q for the extended Euclidean algorithm;
# polynomials are coefficient lists, lowest degree first, no trailing zeros

def _trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pdivmod(f, g):
    f = list(f)
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    lead = g[-1]
    while len(f) >= len(g) and f:
        c = f[-1] / lead
        shift = len(f) - len(g)
        q[shift] = c
        for i, gi in enumerate(g):
            f[shift + i] -= c * gi
        f.pop()
        _trim(f)
    return _trim(q), f


def _psub_mul(a, q, b):
    # a - q*b
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        for j, y in enumerate(b):
            out[i + j] -= x * y
    return _trim(out)


def cyclo_inv(x: CyclotomicNumber) -> CyclotomicNumber:
    """Multiplicative inverse by extended gcd against the p-th cyclotomic polynomial."""
    if x.is_zero():
        raise ZeroDivisionError("inverse of zero in Q(zeta_p)")
    p = x.p
    phi = [Fraction(1)] * p
    a = _trim(list(x.coords))
    # invariant: r_i = s_i * a (mod phi)
    r0, r1 = phi, a
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub_mul(s0, q, s1)
    c = r1[0]
    inv = [v / c for v in s1]
    # reduce inv modulo phi (degree <= p-2 after reduction)
    if len(inv) > p - 1:
        _, inv = _pdivmod(inv, phi)
    return CyclotomicNumber(p, inv)


def galois_apply(x: CyclotomicNumber, k: int) -> CyclotomicNumber:
    """Apply the automorphism zeta -> zeta^k."""
    p = x.p
    if k % p == 0:
        raise ValueError(f"{k} is not a unit modulo {p}")
    k %= p
    out = [0] * p
    for i, c in enumerate(x._num):
        if c:
            out[(i * k) % p] += c
    return CyclotomicNumber._raw(p, out, x._den)


def to_complex(x, precision: int = 15):
    """Numerical value of x with zeta = exp(2 pi i / p).

    Returns a Python complex for ``precision <= 15``; above that the value is
    computed with mpmath at the requested number of digits and returned as
    an ``mpmath.mpc``.
    """
    if not isinstance(x, CyclotomicNumber):
        return complex(x)
    p = x.p
    if precision > 15:
        import mpmath

        with mpmath.workdps(precision + 10):
            total = mpmath.mpc(0)
            for k, c in enumerate(x.coords):
                if c:
                    total += mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(mpmath.mpf(2 * k) / p)
            return +total
    re = []
    im = []
    for k, c in enumerate(x._num):
        if c:
            ang = 2 * math.pi * k / p
            re.append(c * math.cos(ang))
            im.append(c * math.sin(ang))
    return complex(math.fsum(re), math.fsum(im)) / x._den



def cyclo_to_json(x: CyclotomicNumber) -> dict:
    return {"p": x.p, "coords": [[str(c.numerator), str(c.denominator)] for c in x.coords]}


def cyclo_from_json(obj: dict) -> CyclotomicNumber:
    coords = [Fraction(int(n), int(d)) for n, d in obj["coords"]]
    return CyclotomicNumber(int(obj["p"]), coords)
