"""Sparse multivariate polynomials over exact rationals.

The coefficient field is Q throughout (`fractions.Fraction`); there is no
floating point anywhere in this package.  A `Ring` describes a commutative
polynomial ring Q[t1..tm] by generator names and positive integer degrees;
m = 0 gives Q itself.  `Poly` is a sparse polynomial keyed by exponent
vectors, normalized so that no zero coefficient is ever stored.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import DescriptorMismatchError

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]

_ZERO = Fraction(0)
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

# x1 and x2 denote the extension variables everywhere; base generators may
# not shadow them.
RESERVED_NAMES = ("x1", "x2")


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce an int, Fraction, or string like '-3/2' to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Ring:
    """The base ring Q[t1..tm] with named generators and a positive grading."""

    __slots__ = ("names", "degrees")

    def __init__(self, names: Iterable[str] = (), degrees=None):
        names = tuple(names)
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(f"bad generator name: {name!r}")
            if name in RESERVED_NAMES:
                raise ValueError(
                    f"generator name {name!r} is reserved for the extension variables")
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        if degrees is None:
            degrees = (1,) * len(names)
        degrees = tuple(int(d) for d in degrees)
        if len(degrees) != len(names):
            raise ValueError("need exactly one degree per generator")
        if any(d < 1 for d in degrees):
            raise ValueError("generator degrees must be positive integers")
        self.names = names
        self.degrees = degrees

    @property
    def ngens(self) -> int:
        return len(self.names)

    def is_connected(self) -> bool:
        """Degree-0 slice equals Q; true whenever all generator degrees are >= 1."""
        return all(d >= 1 for d in self.degrees)

    def gen_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown generator {name!r}") from None

    def term_degree(self, exps) -> int:
        return sum(e * d for e, d in zip(exps, self.degrees))

    # -- constructors ------------------------------------------------------

    def zero(self) -> "Poly":
        return Poly(self, ())

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c: ScalarLike) -> "Poly":
        return Poly(self, {(0,) * self.ngens: as_scalar(c)})

    def gen(self, k: int) -> "Poly":
        if not 0 <= k < self.ngens:
            raise ValueError(f"generator index {k} out of range")
        exps = tuple(1 if i == k else 0 for i in range(self.ngens))
        return Poly(self, {exps: Fraction(1)})

    def monomial(self, exps, coeff: ScalarLike = 1) -> "Poly":
        return Poly(self, {tuple(exps): as_scalar(coeff)})

    def gens(self):
        return [self.gen(k) for k in range(self.ngens)]

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Ring)
                and self.names == other.names and self.degrees == other.degrees)

    def __hash__(self):
        return hash((self.names, self.degrees))

    def __repr__(self):
        if not self.names:
            return "Ring(Q)"
        body = ", ".join(self.names)
        if any(d != 1 for d in self.degrees):
            body += f"; deg {list(self.degrees)}"
        return f"Ring(Q[{body}])"


class Poly:
    """Sparse polynomial in a `Ring`; immutable by convention."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms=()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc = {}
        m = ring.ngens
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != m:
                raise DescriptorMismatchError(
                    f"exponent vector {exps} does not fit a ring with {m} generators")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = acc.get(exps, _ZERO) + as_scalar(coeff)
            if c:
                acc[exps] = c
            else:
                acc.pop(exps, None)
        self.ring = ring
        self.terms = acc

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(not any(exps) for exps in self.terms)

    def constant_value(self) -> Fraction:
        """The coefficient of the constant term (0 if absent)."""
        return self.terms.get((0,) * self.ring.ngens, _ZERO)

    def as_constant(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not a constant")
        return self.constant_value()

    def degree(self):
        """Weighted total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(self.ring.term_degree(e) for e in self.terms)

    def term_degrees(self):
        return {self.ring.term_degree(e) for e in self.terms}

    def is_homogeneous(self, degree=None) -> bool:
        """Zero counts as homogeneous of every degree."""
        degs = self.term_degrees()
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def linear_coeffs(self):
        """Coefficient vector when every term is a degree-1 monomial in one
        generator, else None.  Zero qualifies (all coefficients zero)."""
        out = [_ZERO] * self.ring.ngens
        for exps, c in self.terms.items():
            if sum(exps) != 1:
                return None
            out[exps.index(1)] = c
        return out

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise DescriptorMismatchError(
                    f"mixed base rings: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        for exps, c in other.terms.items():
            s = acc.get(exps, _ZERO) + c
            if s:
                acc[exps] = s
            else:
                acc.pop(exps, None)
        out = Poly.__new__(Poly)
        out.ring = self.ring
        out.terms = acc
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Poly.__new__(Poly)
        out.ring = self.ring
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_scalar(other)
            if not c:
                return self.ring.zero()
            out = Poly.__new__(Poly)
            out.ring = self.ring
            out.terms = {e: c * v for e, v in self.terms.items()}
            return out
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = acc.get(e, _ZERO) + c1 * c2
                if s:
                    acc[e] = s
                else:
                    acc.pop(e, None)
        out = Poly.__new__(Poly)
        out.ring = self.ring
        out.terms = acc
        return out

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            other = other.as_constant()
        c = as_scalar(other)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (Fraction(1) / c)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponents must be nonnegative integers")
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant and self.constant_value() == other
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    __hash__ = None

    # -- formatting --------------------------------------------------------

    def _mono_str(self, exps) -> str:
        parts = []
        for name, e in zip(self.ring.names, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(),
                       key=lambda kv: (self.ring.term_degree(kv[0]), kv[0]),
                       reverse=True)
        chunks = []
        for exps, c in items:
            mono = self._mono_str(exps)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"Poly({self})"


# Functional aliases for the arithmetic surface.

def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_scale(c: ScalarLike, a: Poly) -> Poly:
    return a * as_scalar(c)
