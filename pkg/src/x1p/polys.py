"""Sparse multivariate polynomials in the reduced s/t variables or in r_0..r_{p-1}.

The st ring has variables s_1..s_m, t_1..t_m (m = (p-1)/2) at positions
0..2m-1; indices above m are folded in on construction through
s_{p-a} = -s_a and t_{p-a} = t_a. The r ring has r_0..r_{p-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CyclotomicNumber, Level, as_level, cyclo_from_json, cyclo_to_json

__all__ = [
    "SparsePoly",
    "ModuliPoint",
    "MissingVariableError",
    "reduce_index",
    "s_var",
    "t_var",
    "r_var",
    "eval_poly",
    "jacobian",
    "poly_to_json",
    "poly_from_json",
]

ST = "st"
R = "r"


class MissingVariableError(KeyError):
    pass


def reduce_index(lvl: Level, a: int) -> tuple[int, int]:
    """(sign, reduced index in 1..m) for the residue a, using s_{p-a} = -s_a."""
    p = lvl.p
    a %= p
    if a == 0:
        raise ValueError("index 0 has no s/t variable")
    if a <= lvl.m:
        return 1, a
    return -1, p - a


class SparsePoly:
    """Immutable polynomial as a dict from exponent tuples to coefficients."""

    __slots__ = ("level", "kind", "terms")

    def __init__(self, level, kind: str, terms=None):
        level = as_level(level)
        if kind not in (ST, R):
            raise ValueError(f"unknown variable set {kind!r}")
        clean = {}
        for e, c in (terms or {}).items():
            if not c == 0:
                clean[tuple(e)] = c
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SparsePoly is immutable")

    @property
    def nvars(self) -> int:
        return 2 * self.level.m if self.kind == ST else self.level.p

    def var_names(self) -> list[str]:
        m = self.level.m
        if self.kind == ST:
            return [f"s{a}" for a in range(1, m + 1)] + [f"t{a}" for a in range(1, m + 1)]
        return [f"r{a}" for a in range(self.level.p)]

    def weights(self) -> list[int]:
        if self.kind == ST:
            m = self.level.m
            return [1] * m + [2] * m
        return [1] * self.level.p

    @classmethod
    def zero(cls, level, kind=ST):
        return cls(level, kind)

    @classmethod
    def constant(cls, level, c, kind=ST):
        level = as_level(level)
        n = 2 * level.m if kind == ST else level.p
        return cls(level, kind, {(0,) * n: c})

    def _check(self, other):
        if not isinstance(other, SparsePoly):
            return False
        if other.level != self.level or other.kind != self.kind:
            raise ValueError("polynomials live in different rings")
        return True

    def __add__(self, other):
        if not self._check(other):
            if other == 0:
                return self
            return self + SparsePoly.constant(self.level, other, self.kind)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return SparsePoly(self.level, self.kind, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.level, self.kind, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not self._check(other):
            return SparsePoly(self.level, self.kind, {e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return SparsePoly(self.level, self.kind, out)

    def __rmul__(self, other):
        return SparsePoly(self.level, self.kind, {e: other * c for e, c in self.terms.items()})

    def __pow__(self, n: int):
        result = SparsePoly.constant(self.level, 1, self.kind)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            if other.level != self.level or other.kind != self.kind:
                return False
            return (self - other).is_zero()
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return (self - other).is_zero()
        return NotImplemented

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def weighted_degrees(self) -> set[int]:
        w = self.weights()
        return {sum(a * b for a, b in zip(e, w)) for e in self.terms}

    def is_weighted_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.weighted_degrees()
        if not degs:
            return True
        return len(degs) == 1 and (degree is None or degs == {degree})

    def derivative(self, i: int) -> SparsePoly:
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return SparsePoly(self.level, self.kind, out)

    def substitute(self, images) -> SparsePoly:
        """Ring substitution x_i -> images[i] (each a SparsePoly in the same ring)."""
        result = SparsePoly.zero(self.level, self.kind)
        cache = {}
        for e, c in self.terms.items():
            term = SparsePoly.constant(self.level, c, self.kind)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = images[i] ** k
                    term = term * cache[key]
            result = result + term
        return result

    def map_coefficients(self, fn) -> SparsePoly:
        return SparsePoly(self.level, self.kind, {e: fn(c) for e, c in self.terms.items()})

    def __repr__(self):
        return f"SparsePoly({self.level.p}, {self.kind!r}, {self})"

    def __str__(self):
        return to_text(self)


def _mono_text(e, names):
    parts = []
    for i, k in enumerate(e):
        if k == 1:
            parts.append(names[i])
        elif k:
            parts.append(f"{names[i]}^{k}")
    return "*".join(parts)


def _sort_key(e):
    return (-sum(e), tuple(-x for x in e))


def to_text(f: SparsePoly) -> str:
    names = f.var_names()
    if f.is_zero():
        return "0"
    out = []
    for e in sorted(f.terms, key=_sort_key):
        c = f.terms[e]
        mono = _mono_text(e, names)
        if isinstance(c, CyclotomicNumber) and c.is_rational():
            c = c.rational_value()
        if isinstance(c, (int, Fraction)):
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            out.append((sign, body))
        else:
            out.append(("+", f"({c})*{mono}" if mono else f"({c})"))
    text = "".join(f" {s} {b}" for s, b in out).strip()
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def s_var(lvl, a: int) -> SparsePoly:
    lvl = as_level(lvl)
    sign, i = reduce_index(lvl, a)
    e = [0] * (2 * lvl.m)
    e[i - 1] = 1
    return SparsePoly(lvl, ST, {tuple(e): Fraction(sign)})


def t_var(lvl, a: int) -> SparsePoly:
    lvl = as_level(lvl)
    _, i = reduce_index(lvl, a)
    e = [0] * (2 * lvl.m)
    e[lvl.m + i - 1] = 1
    return SparsePoly(lvl, ST, {tuple(e): Fraction(1)})


def r_var(lvl, a: int) -> SparsePoly:
    lvl = as_level(lvl)
    e = [0] * lvl.p
    e[a % lvl.p] = 1
    return SparsePoly(lvl, R, {tuple(e): Fraction(1)})


@dataclass(frozen=True)
class ModuliPoint:
    """A point (s_1..s_m, t_1..t_m) of P(1,..,1,2,..,2); entries in any ring."""

    level: Level
    s: tuple
    t: tuple

    def __post_init__(self):
        object.__setattr__(self, "level", as_level(self.level))
        object.__setattr__(self, "s", tuple(self.s))
        object.__setattr__(self, "t", tuple(self.t))
        m = self.level.m
        if len(self.s) != m or len(self.t) != m:
            raise ValueError(f"expected {m} s- and {m} t-coordinates")

    @classmethod
    def from_residues(cls, lvl, s: dict, t: dict) -> ModuliPoint:
        """Build from values indexed by 1..p-1 (only 1..m are read)."""
        lvl = as_level(lvl)
        r = range(1, lvl.m + 1)
        return cls(lvl, tuple(s[a] for a in r), tuple(t[a] for a in r))

    def s_at(self, a: int):
        sign, i = reduce_index(self.level, a)
        v = self.s[i - 1]
        return v if sign > 0 else -v

    def t_at(self, a: int):
        _, i = reduce_index(self.level, a)
        return self.t[i - 1]

    def coordinates(self) -> list:
        return list(self.s) + list(self.t)

    def scale(self, lam) -> ModuliPoint:
        lam2 = lam * lam
        return ModuliPoint(self.level, tuple(lam * x for x in self.s), tuple(lam2 * x for x in self.t))

    def map(self, fn) -> ModuliPoint:
        return ModuliPoint(self.level, tuple(fn(x) for x in self.s), tuple(fn(x) for x in self.t))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coordinates())


def eval_poly(f: SparsePoly, point, zero=0, cache: dict | None = None):
    """Substitute values for the variables of f.

    ``point`` is a ModuliPoint (st ring), a sequence indexed by variable
    position, or a dict from position to value. ``cache`` memoizes monomial
    values across calls with the same point.
    """
    if isinstance(point, ModuliPoint):
        values = point.coordinates()
    else:
        values = point
    total = None
    for e, c in f.terms.items():
        key = e
        if cache is not None and key in cache:
            mono = cache[key]
        else:
            mono = None
            for i, k in enumerate(e):
                if not k:
                    continue
                try:
                    v = values[i]
                except (IndexError, KeyError):
                    raise MissingVariableError(f.var_names()[i]) from None
                for _ in range(k):
                    mono = v if mono is None else mono * v
            if cache is not None:
                cache[key] = mono
        term = c if mono is None else mono * c
        total = term if total is None else total + term
    return zero if total is None else total


def jacobian(polys, point) -> list[list]:
    """Rows of partial derivatives of each polynomial, evaluated at point."""
    out = []
    for f in polys:
        out.append([eval_poly(f.derivative(i), point) for i in range(f.nvars)])
    return out


def poly_to_json(f: SparsePoly) -> list[dict]:
    names = f.var_names()
    p = f.level.p
    out = []
    for e in sorted(f.terms, key=_sort_key):
        c = f.terms[e]
        if not isinstance(c, CyclotomicNumber):
            c = CyclotomicNumber.rational(p, c)
        out.append({"monomial": {names[i]: k for i, k in enumerate(e) if k}, "coeff": cyclo_to_json(c)})
    return out


def poly_from_json(lvl, kind: str, terms: list[dict]) -> SparsePoly:
    lvl = as_level(lvl)
    proto = SparsePoly.zero(lvl, kind)
    index = {n: i for i, n in enumerate(proto.var_names())}
    out = {}
    for term in terms:
        e = [0] * proto.nvars
        for name, k in term["monomial"].items():
            e[index[name]] = int(k)
        c = cyclo_from_json(term["coeff"])
        out[tuple(e)] = c.rational_value() if c.is_rational() else c
    return SparsePoly(lvl, kind, out)
