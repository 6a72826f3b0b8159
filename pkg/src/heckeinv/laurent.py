"""Exact Laurent polynomials in ``q``, rational functions and delta-series.

Everything here is immutable.  Coefficients are Python ints or
:class:`fractions.Fraction`; integral fractions are stored as ints so the
common case stays fast.

>>> q = LaurentPoly.q()
>>> str((q - 1) * (q + 1))
'q^2-1'
>>> str(exact_div(q**3 + 1, q + 1))
'q^2-q+1'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd, lcm
from numbers import Rational
from typing import Iterable, Mapping, Union

from .errors import DivisionByZero, NotDivisible, ZeroBase

__all__ = [
    "LaurentPoly",
    "RationalFunction",
    "DeltaSeries",
    "add",
    "mul",
    "exact_div",
    "q_bracket",
    "f_coeff",
    "power_expand",
    "to_delta_series",
    "eval_at",
    "parse_laurent",
]

MAX_EXPONENT = 2**31 - 1

Coeff = Union[int, Fraction]


def _norm(c) -> Coeff:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"inexact coefficient {c!r}")


def _integer_image(c: dict) -> tuple[dict, int]:
    """``(ints, d)`` with ``c[e] == ints[e] / d``."""
    d = 1
    for v in c.values():
        if isinstance(v, Fraction):
            d = lcm(d, v.denominator)
    if d == 1:
        return c, 1
    return {e: int(v * d) for e, v in c.items()}, d


def _check_exp(e: int) -> int:
    if not -MAX_EXPONENT <= e <= MAX_EXPONENT:
        raise OverflowError(f"Laurent exponent {e} out of range")
    return e


class LaurentPoly:
    """A Laurent polynomial ``sum c_e q^e`` with exact rational coefficients.

    Only nonzero coefficients are stored, so two values are equal exactly when
    their exponent-to-coefficient maps agree.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = _norm(v)
                if v:
                    c[_check_exp(int(e))] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    # constructors
    @classmethod
    def q(cls) -> "LaurentPoly":
        return cls._raw({1: 1})

    @classmethod
    def monomial(cls, e: int, c: object = 1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def const(cls, c: object) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        return cls({0: x})

    # inspection
    def items(self):
        return self._c.items()

    def coefficient(self, e: int) -> Coeff:
        return self._c.get(e, 0)

    def exponents(self) -> list[int]:
        return sorted(self._c, reverse=True)

    @property
    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    @property
    def valuation(self) -> int | None:
        return min(self._c) if self._c else None

    def is_zero(self) -> bool:
        return not self._c

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._c.get(0, 0)

    def coefficient_sum(self) -> Coeff:
        return _norm(sum(self._c.values(), Fraction(0)))

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Fraction)):
                other = LaurentPoly.const(other)
            else:
                return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = _norm(s)
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Fraction)):
                other = LaurentPoly.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _norm(other)
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: _norm(v * other) for e, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._c or not other._c:
            return LaurentPoly._raw({})
        # multiply integer images and divide once; Fraction arithmetic in the
        # inner loop is an order of magnitude slower
        a, da = _integer_image(self._c)
        b, db = _integer_image(other._c)
        c: dict = {}
        for e1, v1 in a.items():
            for e2, v2 in b.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        for e in [e for e, v in c.items() if not v]:
            del c[e]
        if c:
            _check_exp(max(c))
            _check_exp(min(c))
        d = da * db
        if d == 1:
            return LaurentPoly._raw(c)
        return LaurentPoly._raw({e: _norm(Fraction(v, d)) for e, v in c.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) != 1:
                raise NotDivisible(f"negative power of non-monomial {self}")
            ((e, v),) = self._c.items()
            return LaurentPoly({e * k: Fraction(1) / Fraction(v) ** (-k)})
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q**k``."""
        return LaurentPoly._raw({_check_exp(e + k): v for e, v in self._c.items()})

    def subs_power(self, k: int) -> "LaurentPoly":
        """Substitute ``q -> q**k``."""
        return LaurentPoly._raw({_check_exp(e * k): v for e, v in self._c.items()})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionByZero("division by zero constant")
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, LaurentPoly):
            return exact_div(self, other)
        return NotImplemented

    # comparison
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == LaurentPoly.const(other)._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # evaluation
    def __call__(self, q0):
        return eval_at(self, q0)

    # rendering
    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            sign = "-" if v < 0 else "+"
            a = -v if v < 0 else v
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if a == 1 else f"{a}{mono}"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        return text + "".join(s + b for s, b in out[1:])

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> dict[str, str]:
        out = {}
        for e in sorted(self._c, reverse=True):
            v = Fraction(self._c[e])
            out[str(e)] = f"{v.numerator}/{v.denominator}"
        return out

    @classmethod
    def from_json(cls, obj: Mapping[str, str]) -> "LaurentPoly":
        return cls({int(k): Fraction(v) for k, v in obj.items()})

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        return parse_laurent(text)


_TERM = re.compile(r"([+-])?(\d+(?:/\d+)?)?(q(?:\^(-?\d+))?)?")


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the canonical rendering, e.g. ``q^3+2q^2+3q-2-q^-1``.

    Like terms are combined, so ``q^2+q^2`` parses to ``2q^2``.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    pos = 0
    coeffs: dict[int, Fraction] = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        sign, num, mono, exp = m.groups()
        if not first and sign is None:
            raise ValueError(f"missing sign in {text!r} at offset {pos}")
        if num is None and mono is None:
            raise ValueError(f"dangling sign in {text!r}")
        c = Fraction(num) if num is not None else Fraction(1)
        if sign == "-":
            c = -c
        e = 0 if mono is None else (1 if exp is None else int(exp))
        coeffs[e] = coeffs.get(e, Fraction(0)) + c
        pos = m.end()
        first = False
    return LaurentPoly(coeffs)


Q = LaurentPoly.q()
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


# --- dense polynomial helpers (coefficient lists, low degree first) ---------

def _to_dense(a: LaurentPoly) -> tuple[int, list]:
    """Split ``a = q^v * P(q)`` with ``P(0) != 0``."""
    v = a.valuation
    dense = [0] * (a.degree - v + 1)
    for e, c in a.items():
        dense[e - v] = c
    return v, dense


def _from_dense(v: int, dense: list) -> LaurentPoly:
    return LaurentPoly._raw({v + i: _norm(c) for i, c in enumerate(dense) if c})


def _trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _pdivmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    lead = b[-1]
    db = len(b) - 1
    if len(a) <= db:
        return [], _trim(a)
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if not c:
            continue
        if isinstance(c, int) and isinstance(lead, int) and c % lead == 0:
            f = c // lead
        else:
            f = _norm(Fraction(c) / lead)
        quot[i - db] = f
        for j in range(db + 1):
            a[i - db + j] -= f * b[j]
    return quot, _trim(a[:db])


def _pmonic(p: list) -> list:
    lead = p[-1]
    if lead == 1:
        return p
    return [_norm(Fraction(c) / lead) for c in p]


def _primitive(p: list) -> list:
    """Integer polynomial with coprime coefficients and positive lead, up to a rational factor."""
    den = 1
    for c in p:
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder of integer polynomials: lead(b)^k a mod b."""
    a = list(a)
    lead, db = b[-1], len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            a = [x * lead for x in a]
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return _trim(a[:db])


def _pgcd(a: list, b: list) -> list:
    # primitive remainder sequence over the integers; avoids Fraction blow-up
    a, b = _trim(list(a)), _trim(list(b))
    if not a:
        return _pmonic(b) if b else []
    if not b:
        return _pmonic(a)
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r) if r else r
    return _pmonic(a)


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return ``c`` with ``c * b == a``; raise :class:`NotDivisible` otherwise."""
    if b.is_zero():
        raise DivisionByZero("division by the zero Laurent polynomial")
    if a.is_zero():
        return ZERO
    if b.is_monomial():
        ((e, v),) = b.items()
        inv = Fraction(1) / Fraction(v)
        return LaurentPoly._raw({k - e: _norm(c * inv) for k, c in a.items()})
    va, pa = _to_dense(a)
    vb, pb = _to_dense(b)
    quot, rem = _pdivmod(pa, pb)
    if rem:
        raise NotDivisible(f"({a}) is not divisible by ({b})")
    return _from_dense(va - vb, quot)


def q_bracket(m: int) -> LaurentPoly:
    """The q-integer ``[m]_q = (q^m - 1)/(q - 1)``, for any integer ``m``."""
    if m >= 0:
        return LaurentPoly._raw({t: 1 for t in range(m)})
    return LaurentPoly._raw({t: -1 for t in range(m, 0)})


def f_coeff(p: int) -> LaurentPoly:
    """``f_p = (q^p - (-1)^p)/(q + 1)``, the coefficient in ``g^p = f_p g + q f_{p-1}``."""
    if p < 0:
        raise ValueError("f_coeff needs p >= 0")
    # (q^p - (-1)^p)/(q+1) = sum_{t<p} (-1)^(p-1-t) q^t
    return LaurentPoly._raw({t: (-1) ** (p - 1 - t) for t in range(p)})


def power_expand(p: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Return ``(f_p, q f_{p-1})`` so that ``g^p = f_p g + q f_{p-1}``."""
    if p < 1:
        raise ValueError("power_expand needs p >= 1")
    return f_coeff(p), f_coeff(p - 1).shift(1)


def eval_at(a: LaurentPoly, q0) -> Coeff:
    q0 = _norm(q0)
    if q0 == 0:
        raise ZeroBase("cannot evaluate a Laurent polynomial at q = 0")
    if q0 == 1:
        return a.coefficient_sum()
    q0 = Fraction(q0)
    total = Fraction(0)
    for e, c in a.items():
        total += c * q0**e
    return _norm(total)


# --- delta series -----------------------------------------------------------

@dataclass(frozen=True)
class DeltaSeries:
    """Truncated power series ``sum_{j<=order} coeffs[j] * delta^j``."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order + 1 coefficients")
        object.__setattr__(self, "coeffs", tuple(_norm(c) for c in self.coeffs))

    def __getitem__(self, j: int) -> Coeff:
        return self.coeffs[j]

    def __add__(self, other: "DeltaSeries") -> "DeltaSeries":
        k = min(self.order, other.order)
        return DeltaSeries(k, tuple(self.coeffs[j] + other.coeffs[j] for j in range(k + 1)))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return DeltaSeries(self.order, tuple(c * other for c in self.coeffs))
        k = min(self.order, other.order)
        out = [0] * (k + 1)
        for i in range(k + 1):
            for j in range(k + 1 - i):
                out[i + j] += self.coeffs[i] * other.coeffs[j]
        return DeltaSeries(k, tuple(out))

    def truncate(self, order: int) -> "DeltaSeries":
        return DeltaSeries(order, self.coeffs[: order + 1])

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if j == 0 else f"({c})*d^{j}")
        return " + ".join(terms) or "0"

    def to_json(self) -> list[str]:
        return [f"{Fraction(c).numerator}/{Fraction(c).denominator}" for c in self.coeffs]


def to_delta_series(a: LaurentPoly, order: int) -> DeltaSeries:
    """Taylor coefficients of ``a(e^delta)`` about ``delta = 0``.

    ``sum_e c_e e^{e delta}`` has ``delta^j`` coefficient ``sum_e c_e e^j / j!``.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = []
    for j in range(order + 1):
        s = sum((c * e**j for e, c in a.items()), Fraction(0))
        coeffs.append(Fraction(s) / factorial(j))
    return DeltaSeries(order, tuple(coeffs))


# --- rational functions -----------------------------------------------------

class RationalFunction:
    """Quotient of Laurent polynomials, kept in lowest terms.

    The stored denominator is a monic polynomial with nonzero constant term;
    any power of ``q`` is folded into the numerator.  Equality still goes
    through cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced=False):
        num = LaurentPoly.coerce(num)
        den = ONE if den is None else LaurentPoly.coerce(den)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        return cls(LaurentPoly.coerce(x), ONE, _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == ONE

    def to_laurent(self) -> LaurentPoly:
        if self.den == ONE:
            return self.num
        raise NotDivisible(f"{self} is not a Laurent polynomial")

    def __add__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        # Henrici: only the common factor of the denominators can cancel
        g = poly_gcd(self.den, other.den)
        if g == ONE:
            b, d = self.den, other.den
        else:
            b, d = exact_div(self.den, g), exact_div(other.den, g)
        num = self.num * d + other.num * b
        if num.is_zero():
            return RF_ZERO
        if g == ONE:
            return RationalFunction(num, b * d, _reduced=True)
        num, g = _reduce(num, g)
        return RationalFunction(num, g * b * d, _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return RF_ZERO
        if self.den == ONE and other.den == ONE:
            return RationalFunction(self.num * other.num, ONE, _reduced=True)
        # cancel across: gcd(a, d) and gcd(c, b) for (a/b)(c/d)
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = _cancel_gcd(a, d)
        g2 = _cancel_gcd(c, b)
        if g1 != ONE:
            a, d = exact_div(a, g1), exact_div(d, g1)
        if g2 != ONE:
            c, b = exact_div(c, g2), exact_div(b, g2)
        return RationalFunction(a * c, b * d, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _rf(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num**k, self.den**k, _reduced=True)

    def __eq__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return other
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def eval_at(self, q0) -> Coeff:
        d = eval_at(self.den, q0)
        if d == 0:
            raise DivisionByZero(f"denominator of {self} vanishes at q = {q0}")
        return _norm(Fraction(eval_at(self.num, q0)) / d)

    def subs_power(self, k: int) -> "RationalFunction":
        return RationalFunction(self.num.subs_power(k), self.den.subs_power(k))

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def _rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (LaurentPoly, int, Fraction)):
        return RationalFunction.coerce(x)
    return NotImplemented


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of the polynomial parts of ``a`` and ``b`` (powers of ``q`` ignored)."""
    if a == ONE or b == ONE:
        return ONE
    if a.is_zero() or b.is_zero():
        raise DivisionByZero("gcd with the zero polynomial")
    _, pa = _to_dense(a)
    _, pb = _to_dense(b)
    return _from_dense(0, _pgcd(pa, pb))


def _cancel_gcd(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    # den is a reduced denominator: monic, nonzero constant term
    if den == ONE:
        return ONE
    return poly_gcd(num, den)


def _reduce(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return ZERO, ONE
    if den.is_monomial():
        return exact_div(num, den), ONE
    vn, pn = _to_dense(num)
    vd, pd = _to_dense(den)
    g = _pgcd(pn, pd)
    if len(g) > 1:
        pn, _ = _pdivmod(pn, g)
        pd, _ = _pdivmod(pd, g)
    lead = pd[-1]
    if lead != 1:
        inv = Fraction(1) / Fraction(lead)
        pn = [c * inv for c in pn]
        pd = [c * inv for c in pd]
    if len(pd) == 1:
        return _from_dense(vn - vd, pn), ONE
    return _from_dense(vn - vd, pn), _from_dense(0, pd)


RF_ZERO = RationalFunction(ZERO, ONE, _reduced=True)
RF_ONE = RationalFunction(ONE, ONE, _reduced=True)


def as_rational(x) -> RationalFunction:
    return RationalFunction.coerce(x)


def linear_combination(terms: Iterable[tuple[object, LaurentPoly]]) -> LaurentPoly:
    """Sum ``coeff * value`` where coefficients may be rational functions.

    The result must clear to a Laurent polynomial.
    """
    total = RF_ZERO
    for coeff, value in terms:
        total = total + _rf(coeff) * _rf(value)
    return total.to_laurent()
