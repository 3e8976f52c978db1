"""Euclidean domains with exact arithmetic.

Three rings are supported:

* ``ZZ``  -- arbitrary precision integers (Python ``int``)
* ``QQ``  -- rationals (``fractions.Fraction``), a field
* ``QQt`` -- univariate polynomials over the rationals (:class:`Poly`)

Elements are plain Python values that support ``+ - *`` and ``==``; the ring
object supplies everything else (division with remainder, Euclidean size,
unit normalization, parsing and printing).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Tuple


class Poly:
    """Polynomial in ``t`` with rational coefficients, stored low degree first.

    Trailing zero coefficients are never stored, so the zero polynomial has
    ``coeffs == ()`` and ``deg == -1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _lift(cls, x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls((x,))
        return NotImplemented

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        other = Poly._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __add__(self, other):
        other = Poly._lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = Poly._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Poly._lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Poly((1,))
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other):
        other = Poly._lift(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.lead
        dg = other.deg
        while len(rem) - 1 >= dg and rem:
            c = rem[-1] / lead
            shift = len(rem) - 1 - dg
            q[shift] = c
            for k, y in enumerate(other.coeffs):
                rem[shift + k] -= c * y
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(q), Poly(rem)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _format_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Poly, var: str = "t") -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(p.deg, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            body = _format_fraction(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_fraction(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


_TERM = re.compile(
    r"""^(?P<coef>\d+(?:/\d+)?)?\s*\*?\s*(?P<var>t(?:\s*\^\s*(?P<exp>\d+))?)?$"""
)


def parse_poly(text: str) -> Poly:
    """Parse strings such as ``"t^2+1"``, ``"3/2*t - 1"`` or ``"-2t^3"``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    acc = Poly()
    for term in terms:
        sign = -1 if term[0] == "-" else 1
        body = term.lstrip("+-")
        m = _TERM.match(body)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse polynomial term {term!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        exp = 0
        if m.group("var"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        acc = acc + Poly([0] * exp + [sign * coef])
    return acc


class Ring:
    """A Euclidean domain. Subclasses fix the element representation."""

    tag: str = ""
    name: str = ""

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Ring) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    # -- to be provided by subclasses --------------------------------------
    zero = None
    one = None

    def coerce(self, x):
        raise NotImplementedError

    def norm(self, a) -> int:
        """Euclidean size of a nonzero element."""
        raise NotImplementedError

    def divmod(self, a, b):
        raise NotImplementedError

    def unit_part(self, a):
        """The unit u with ``a == u * normalize(a)`` (1 for zero)."""
        raise NotImplementedError

    def unit_inverse(self, u):
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    # -- generic -------------------------------------------------------------
    def is_zero(self, a) -> bool:
        return a == self.zero

    def normalize(self, a):
        return a * self.unit_inverse(self.unit_part(a))

    def divides(self, a, b) -> bool:
        """True when ``a | b``."""
        if a == self.zero:
            return b == self.zero
        return self.divmod(b, a)[1] == self.zero

    def exact_div(self, b, a):
        q, r = self.divmod(b, a)
        if r != self.zero:
            raise ArithmeticError(f"{self.format(a)} does not divide {self.format(b)}")
        return q

    def gcd(self, a, b):
        a, b = self.coerce(a), self.coerce(b)
        while b != self.zero:
            a, b = b, self.divmod(a, b)[1]
        return self.normalize(a)

    def lcm(self, a, b):
        if a == self.zero or b == self.zero:
            return self.zero
        return self.normalize(self.exact_div(a * b, self.gcd(a, b)))

    def module_symbol(self) -> str:
        return self.tag


class IntegerRing(Ring):
    tag = "Z"
    name = "ZZ"
    zero = 0
    one = 1

    def coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("booleans are not ring elements")
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        if isinstance(x, Poly) and x.deg <= 0 and x.lead.denominator == 1:
            return int(x.lead)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {x!r} into ZZ")

    def norm(self, a):
        return abs(a)

    def divmod(self, a, b):
        return divmod(a, b)

    def unit_part(self, a):
        return -1 if a < 0 else 1

    def unit_inverse(self, u):
        if u not in (1, -1):
            raise ArithmeticError(f"{u} is not a unit of ZZ")
        return u

    def is_unit(self, a):
        return a in (1, -1)

    def parse(self, text):
        return int(str(text).strip())

    def format(self, a):
        return str(a)


class RationalField(Ring):
    tag = "Q"
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("booleans are not ring elements")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, Poly) and x.deg <= 0:
            return x.lead
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def norm(self, a):
        return 0

    def divmod(self, a, b):
        return a / b, Fraction(0)

    def unit_part(self, a):
        return a if a != 0 else Fraction(1)

    def unit_inverse(self, u):
        return 1 / Fraction(u)

    def is_unit(self, a):
        return a != 0

    def parse(self, text):
        return Fraction(str(text).strip())

    def format(self, a):
        return _format_fraction(a)


class RationalPolynomialRing(Ring):
    tag = "Qt"
    name = "QQ[t]"
    zero = Poly()
    one = Poly((1,))

    def coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("booleans are not ring elements")
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly((x,))
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (list, tuple)):
            return Poly(Fraction(str(c)) if isinstance(c, str) else c for c in x)
        raise TypeError(f"cannot coerce {x!r} into QQ[t]")

    def norm(self, a):
        return a.deg

    def divmod(self, a, b):
        return divmod(a, b)

    def unit_part(self, a):
        return Poly((a.lead,)) if a else Poly((1,))

    def unit_inverse(self, u):
        if u.deg != 0:
            raise ArithmeticError(f"{u} is not a unit of QQ[t]")
        return Poly((1 / u.lead,))

    def is_unit(self, a):
        return a.deg == 0

    def parse(self, text):
        return parse_poly(str(text))

    def format(self, a):
        return format_poly(a)

    @property
    def t(self) -> Poly:
        return Poly((0, 1))


ZZ = IntegerRing()
QQ = RationalField()
QQt = RationalPolynomialRing()

_BY_TAG = {"Z": ZZ, "Q": QQ, "Qt": QQt}


def ring_from_tag(tag: str) -> Ring:
    try:
        return _BY_TAG[tag]
    except KeyError:
        raise ValueError(f"unknown ring tag {tag!r} (expected one of Z, Q, Qt)") from None
