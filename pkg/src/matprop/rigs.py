"""Commutative rigs and their elements.

A rig is a commutative ring without the requirement that elements have
additive inverses.  Seven rigs ship with the package:

    bool     two truth values, addition is OR, multiplication is AND
    nat      natural numbers (arbitrary precision)
    int      integers (arbitrary precision)
    f2       the two-element field, 1 + 1 = 0
    rat      rationals, always stored in lowest terms
    nnrat    non-negative rationals
    ratfunc  rational functions in one variable s over the rationals

All arithmetic is exact; equality of elements is structural equality of
canonical forms.  Values are immutable and safe to share between threads.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .errors import ConfigError, DomainError, ParseError, RigMismatchError, SourceSpan

IDEMPOTENT_ADD = "idempotent-add"
ADDITIVE_INVERSES = "additive-inverses"
CHAR_TWO = "char-two"


# ---------------------------------------------------------------------------
# dense polynomials over Fraction, used by the rational-function rig
#
# A polynomial is a tuple of Fractions, constant term first, with no
# trailing zeros; the zero polynomial is the empty tuple.

_PZERO: tuple[Fraction, ...] = ()
_PONE: tuple[Fraction, ...] = (Fraction(1),)


def _ptrim(cs: list[Fraction]) -> tuple[Fraction, ...]:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _ptrim(out)


def _pscale(a: tuple[Fraction, ...], q: Fraction) -> tuple[Fraction, ...]:
    if q == 0:
        return _PZERO
    return tuple(c * q for c in a)


def _pmul(a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    if not a or not b:
        return _PZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _ptrim(out)


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    rem = list(a)
    lead = b[-1]
    while len(rem) >= len(b):
        c = rem[-1] / lead
        k = len(rem) - len(b)
        quot[k] = c
        for i, cb in enumerate(b):
            rem[k + i] -= c * cb
        del rem[-1]
        while rem and rem[-1] == 0:
            rem.pop()
    return _ptrim(quot), _ptrim(rem)


def _pmonic(a: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    if not a or a[-1] == 1:
        return a
    return _pscale(a, 1 / a[-1])


def _pgcd(a, b):
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    return _pmonic(a)


@dataclass(frozen=True)
class RationalFunction:
    """A reduced fraction of polynomials with monic denominator."""

    num: tuple[Fraction, ...]
    den: tuple[Fraction, ...]

    @staticmethod
    def make(num: tuple[Fraction, ...], den: tuple[Fraction, ...]) -> "RationalFunction":
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return RationalFunction(_PZERO, _PONE)
        g = _pgcd(num, den)
        if len(g) > 1 or g[0] != 1:
            num, _ = _pdivmod(num, g)
            den, _ = _pdivmod(den, g)
        lead = den[-1]
        if lead != 1:
            num = _pscale(num, 1 / lead)
            den = _pscale(den, 1 / lead)
        return RationalFunction(num, den)


# ---------------------------------------------------------------------------
# literal scanning helpers

_INT_RE = re.compile(r"[+-]?\d+")
_RAT_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?")
_POLY_TERM_RE = re.compile(r"(?:(?P<coef>\d+(?:/\d+)?)\*?)?(?:(?P<s>s)(?:\^(?P<exp>\d+))?)?")


def _span(text: str, offset: int) -> SourceSpan:
    return SourceSpan(offset, offset + len(text))


def _parse_poly(text: str, offset: int) -> tuple[Fraction, ...]:
    src = text.strip()
    shift = offset + (len(text) - len(text.lstrip()))
    if not src:
        raise ParseError("empty polynomial", SourceSpan(offset, offset + len(text)))
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(src):
        sign = 1
        if src[pos] == "+":
            pos += 1
        elif src[pos] == "-":
            sign = -1
            pos += 1
        elif not first:
            raise ParseError("expected '+' or '-'", SourceSpan(shift + pos, shift + pos + 1))
        first = False
        start = pos
        while pos < len(src) and src[pos] not in "+-":
            pos += 1
        chunk = src[start:pos].strip()
        here = SourceSpan(shift + start, shift + pos)
        m = _POLY_TERM_RE.fullmatch(chunk)
        if m is None or (m.group("coef") is None and m.group("s") is None):
            raise ParseError(f"bad polynomial term {chunk!r}", here)
        coef = Fraction(1)
        if m.group("coef") is not None:
            p, _, q = m.group("coef").partition("/")
            if q and int(q) == 0:
                raise ParseError("zero denominator in coefficient", here)
            coef = Fraction(int(p), int(q)) if q else Fraction(int(p))
        deg = 0
        if m.group("s") is not None:
            deg = int(m.group("exp")) if m.group("exp") else 1
        coeffs[deg] = coeffs.get(deg, Fraction(0)) + sign * coef
    top = max(coeffs) if coeffs else 0
    return _ptrim([coeffs.get(d, Fraction(0)) for d in range(top + 1)])


def _show_frac(q: Fraction) -> str:
    return str(q)


def _show_poly(cs: tuple[Fraction, ...]) -> str:
    if not cs:
        return "0"
    parts = []
    for deg in range(len(cs) - 1, -1, -1):
        c = cs[deg]
        if c == 0:
            continue
        if deg == 0:
            piece = _show_frac(c)
        else:
            var = "s" if deg == 1 else f"s^{deg}"
            if c == 1:
                piece = var
            elif c == -1:
                piece = "-" + var
            else:
                piece = f"{_show_frac(c)}*{var}"
        if parts and not piece.startswith("-"):
            parts.append("+")
        parts.append(piece)
    return "".join(parts)


_RF_RE = re.compile(r"\((?P<num>[^()]*)\)/\((?P<den>[^()]*)\)")


# ---------------------------------------------------------------------------
# rigs


class Rig:
    """A commutative rig: carrier values plus exact arithmetic on them.

    Instances act as descriptors (name, flags) and as the arithmetic
    itself.  Subclasses provide raw-value operations; `RigElement` wraps a
    raw value together with its rig for mismatch checking.
    """

    name: str = "?"
    flags: frozenset[str] = frozenset()

    zero: Any = 0
    one: Any = 1

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise DomainError(f"rig {self.name} has no additive inverses")

    def from_int(self, n: int):
        """Image of the integer n under the canonical map into this rig."""
        if n < 0:
            return self.neg(self.from_int(-n))
        v = self.zero
        for _ in range(n):
            v = self.add(v, self.one)
        return v

    def parse(self, text: str, offset: int = 0):
        raise NotImplementedError

    def show(self, value) -> str:
        raise NotImplementedError

    def sample(self, rng: random.Random):
        raise NotImplementedError

    # element-level conveniences

    def element(self, value) -> "RigElement":
        return RigElement(self, value)

    def zero_element(self) -> "RigElement":
        return RigElement(self, self.zero)

    def one_element(self) -> "RigElement":
        return RigElement(self, self.one)

    def parse_literal(self, text: str, offset: int = 0) -> "RigElement":
        return RigElement(self, self.parse(text, offset))

    def __repr__(self) -> str:
        return f"Rig({self.name})"


class BooleanRig(Rig):
    name = "bool"
    flags = frozenset({IDEMPOTENT_ADD})

    def add(self, a, b):
        return a | b

    def mul(self, a, b):
        return a & b

    def from_int(self, n):
        if n < 0:
            raise DomainError("bool has no negative values")
        return 1 if n else 0

    def parse(self, text, offset=0):
        t = text.strip()
        if t in ("0", "false"):
            return 0
        if t in ("1", "true"):
            return 1
        raise ParseError(f"bad bool literal {text!r}", _span(text, offset))

    def show(self, value):
        return str(value)

    def sample(self, rng):
        return rng.randint(0, 1)


class GF2Rig(Rig):
    name = "f2"
    flags = frozenset({ADDITIVE_INVERSES, CHAR_TWO})

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        return a & b

    def neg(self, a):
        return a

    def from_int(self, n):
        return abs(n) % 2

    def parse(self, text, offset=0):
        t = text.strip()
        if t in ("0", "1"):
            return int(t)
        raise ParseError(f"bad f2 literal {text!r}", _span(text, offset))

    def show(self, value):
        return str(value)

    def sample(self, rng):
        return rng.randint(0, 1)


class NaturalRig(Rig):
    name = "nat"
    flags = frozenset()

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        if n < 0:
            raise DomainError("nat has no negative values")
        return n

    def parse(self, text, offset=0):
        t = text.strip()
        if not _INT_RE.fullmatch(t):
            raise ParseError(f"bad nat literal {text!r}", _span(text, offset))
        v = int(t)
        if v < 0:
            raise DomainError(f"negative literal {text!r} in nat")
        return v

    def show(self, value):
        return str(value)

    def sample(self, rng):
        return rng.randint(0, 9)


class IntegerRig(Rig):
    name = "int"
    flags = frozenset({ADDITIVE_INVERSES})

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def from_int(self, n):
        return n

    def parse(self, text, offset=0):
        t = text.strip()
        if not _INT_RE.fullmatch(t):
            raise ParseError(f"bad int literal {text!r}", _span(text, offset))
        return int(t)

    def show(self, value):
        return str(value)

    def sample(self, rng):
        return rng.randint(-9, 9)


class RationalRig(Rig):
    name = "rat"
    flags = frozenset({ADDITIVE_INVERSES})
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def from_int(self, n):
        return Fraction(n)

    def parse(self, text, offset=0):
        t = text.strip()
        m = _RAT_RE.fullmatch(t)
        if not m:
            raise ParseError(f"bad rational literal {text!r}", _span(text, offset))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ParseError(f"zero denominator in {text!r}", _span(text, offset))
        return Fraction(int(m.group(1)), den)

    def show(self, value):
        return str(value)

    def sample(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


class NonNegRationalRig(RationalRig):
    name = "nnrat"
    flags = frozenset()

    def neg(self, a):
        raise DomainError("nnrat has no additive inverses")

    def from_int(self, n):
        if n < 0:
            raise DomainError("nnrat has no negative values")
        return Fraction(n)

    def parse(self, text, offset=0):
        v = super().parse(text, offset)
        if v < 0:
            raise DomainError(f"negative literal {text!r} in nnrat")
        return v

    def sample(self, rng):
        return Fraction(rng.randint(0, 9), rng.randint(1, 9))


class RationalFunctionRig(Rig):
    name = "ratfunc"
    flags = frozenset({ADDITIVE_INVERSES})
    zero = RationalFunction(_PZERO, _PONE)
    one = RationalFunction(_PONE, _PONE)

    def add(self, a, b):
        return RationalFunction.make(
            _padd(_pmul(a.num, b.den), _pmul(b.num, a.den)), _pmul(a.den, b.den)
        )

    def mul(self, a, b):
        return RationalFunction.make(_pmul(a.num, b.num), _pmul(a.den, b.den))

    def neg(self, a):
        return RationalFunction(_pscale(a.num, Fraction(-1)), a.den)

    def from_int(self, n):
        if n == 0:
            return self.zero
        return RationalFunction((Fraction(n),), _PONE)

    def parse(self, text, offset=0):
        t = text.strip()
        shift = offset + (len(text) - len(text.lstrip()))
        m = _RF_RE.fullmatch(t)
        if m:
            num = _parse_poly(m.group("num"), shift + m.start("num"))
            den = _parse_poly(m.group("den"), shift + m.start("den"))
            if not den:
                raise ParseError("zero denominator polynomial", _span(text, offset))
            return RationalFunction.make(num, den)
        if "(" in t or ")" in t:
            raise ParseError(f"bad rational-function literal {text!r}", _span(text, offset))
        return RationalFunction.make(_parse_poly(t, shift), _PONE)

    def show(self, value):
        if value.den == _PONE:
            return _show_poly(value.num)
        return f"({_show_poly(value.num)})/({_show_poly(value.den)})"

    def sample(self, rng):
        num = _ptrim([Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(1, 3))])
        if rng.random() < 0.5:
            den = _PONE
        else:
            den = (Fraction(rng.randint(-2, 2)), Fraction(1))
        return RationalFunction.make(num, den)


BOOL = BooleanRig()
F2 = GF2Rig()
NAT = NaturalRig()
INT = IntegerRig()
RAT = RationalRig()
NNRAT = NonNegRationalRig()
RATFUNC = RationalFunctionRig()

RIGS: dict[str, Rig] = {
    r.name: r for r in (BOOL, NAT, INT, F2, RAT, NNRAT, RATFUNC)
}


def get_rig(name: str) -> Rig:
    try:
        return RIGS[name]
    except KeyError:
        raise ConfigError(f"unknown rig {name!r}; choose from {sorted(RIGS)}") from None


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class RigElement:
    """A value tagged with the rig it lives in."""

    rig: Rig
    value: Any

    def _require_same(self, other: "RigElement") -> None:
        if not isinstance(other, RigElement):
            raise TypeError(f"expected RigElement, got {type(other).__name__}")
        if other.rig is not self.rig:
            raise RigMismatchError(
                f"mixed rigs: {self.rig.name} and {other.rig.name}"
            )

    def __add__(self, other: "RigElement") -> "RigElement":
        self._require_same(other)
        return RigElement(self.rig, self.rig.add(self.value, other.value))

    def __mul__(self, other: "RigElement") -> "RigElement":
        self._require_same(other)
        return RigElement(self.rig, self.rig.mul(self.value, other.value))

    def __neg__(self) -> "RigElement":
        return RigElement(self.rig, self.rig.neg(self.value))

    def is_zero(self) -> bool:
        return self.value == self.rig.zero

    def is_one(self) -> bool:
        return self.value == self.rig.one

    def __str__(self) -> str:
        return self.rig.show(self.value)


def add(a: RigElement, b: RigElement) -> RigElement:
    return a + b


def mul(a: RigElement, b: RigElement) -> RigElement:
    return a * b


def parse_literal(text: str, rig: Rig) -> RigElement:
    return rig.parse_literal(text)


def print_literal(a: RigElement) -> str:
    return a.rig.show(a.value)


# ---------------------------------------------------------------------------
# rig homomorphisms


@dataclass(frozen=True)
class RigHom:
    """A structure-preserving map between rigs (checked by sampling in tests)."""

    source: Rig
    target: Rig
    fn: Callable[[Any], Any]

    def __call__(self, a: RigElement) -> RigElement:
        if a.rig is not self.source:
            raise RigMismatchError(
                f"hom expects {self.source.name} elements, got {a.rig.name}"
            )
        return RigElement(self.target, self.fn(a.value))


def identity_hom(rig: Rig) -> RigHom:
    return RigHom(rig, rig, lambda v: v)


def nat_embedding(target: Rig) -> RigHom:
    """The canonical map out of nat: n goes to the n-fold sum of 1."""
    return RigHom(NAT, target, target.from_int)


def int_embedding(target: Rig) -> RigHom:
    """The canonical map out of int; target must have additive inverses."""
    if ADDITIVE_INVERSES not in target.flags:
        raise DomainError(f"rig {target.name} cannot receive int")
    return RigHom(INT, target, target.from_int)
