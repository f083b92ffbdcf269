"""Presentations of the extension algebra A and its PBW normal forms.

A presentation consists of a base ring R = Q[t1..tm], structure maps
(sigma, delta), a scalar parameter pair (p12, p11) and a tail
(tau1, tau2, tau0) in R.  The algebra is generated over R by x1, x2 subject
to

    x2*x1 = p12*x1*x2 + p11*x1^2 + tau1*x1 + tau2*x2 + tau0          (mixing)
    x_i*r  = s_i1(r)*x1 + s_i2(r)*x2 + d_i(r)   for r in R           (straightening)

Normal forms are left R-combinations of the monomials x1^a1 x2^a2.  Products
are computed by structural recursion on normal forms: ring coefficients move
left past x-letters via the straightening rule, and every x2-before-x1
inversion is removed via the mixing rule.  Each step either lowers the total
x-degree or lowers an inversion count, so the recursion terminates.

Consistency (sigma homomorphism, delta derivation, overlap on generators) is
computed once at construction and cached; presentations that fail any check
remain first-class values, but normal-form arithmetic on them is refused.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Tuple

from .errors import (DescriptorMismatchError, InconsistentMapsError,
                     InconsistentPresentationError)
from .maps import (DetSigmaReport, StructureMaps, det_sigma_endo_maps,
                   det_sigma_maps)
from .poly import Poly, Ring, as_scalar
from .verdict import Verdict

XMono = Tuple[int, int]


class Element:
    """Normal-form member of A: x-monomials with left coefficients in R."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms=()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc = {}
        for mono, coeff in items:
            mono = (int(mono[0]), int(mono[1]))
            if mono[0] < 0 or mono[1] < 0:
                raise ValueError(f"negative x-exponent in {mono}")
            if not isinstance(coeff, Poly):
                coeff = ring.const(as_scalar(coeff))
            elif coeff.ring != ring:
                raise DescriptorMismatchError("coefficient over a different base ring")
            prev = acc.get(mono)
            s = coeff if prev is None else prev + coeff
            if s.is_zero:
                acc.pop(mono, None)
            else:
                acc[mono] = s
        self.ring = ring
        self.terms = acc

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, a1: int, a2: int) -> Poly:
        return self.terms.get((a1, a2), self.ring.zero())

    def x_degree(self):
        """Largest x1+x2 exponent sum, or None for zero."""
        if not self.terms:
            return None
        return max(a1 + a2 for a1, a2 in self.terms)

    # -- linear structure ---------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Element):
            raise TypeError("expected an Element")
        if other.ring != self.ring:
            raise DescriptorMismatchError("elements over different base rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        acc = dict(self.terms)
        for mono, coeff in other.terms.items():
            prev = acc.get(mono)
            s = coeff if prev is None else prev + coeff
            if s.is_zero:
                acc.pop(mono, None)
            else:
                acc[mono] = s
        out = Element.__new__(Element)
        out.ring = self.ring
        out.terms = acc
        return out

    def __neg__(self):
        out = Element.__new__(Element)
        out.ring = self.ring
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor) -> "Element":
        """Left-multiply every coefficient by a ring element or rational."""
        if not isinstance(factor, Poly):
            factor = self.ring.const(as_scalar(factor))
        acc = {}
        for mono, coeff in self.terms.items():
            p = factor * coeff
            if not p.is_zero:
                acc[mono] = p
        out = Element.__new__(Element)
        out.ring = self.ring
        out.terms = acc
        return out

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    __hash__ = None

    # -- formatting ---------------------------------------------------------

    @staticmethod
    def _x_str(mono: XMono) -> str:
        parts = []
        for name, e in zip(("x1", "x2"), mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(),
                       key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]),
                       reverse=True)
        chunks = []
        for mono, coeff in items:
            xs = self._x_str(mono)
            if len(coeff.terms) == 1:
                (exps, c), = coeff.terms.items()
                mono_str = coeff._mono_str(exps)
                mag = abs(c)
                pieces = []
                if mag != 1 or (not mono_str and not xs):
                    pieces.append(str(mag))
                if mono_str:
                    pieces.append(mono_str)
                if xs:
                    pieces.append(xs)
                body = "*".join(pieces)
                negative = c < 0
            else:
                body = f"({coeff})*{xs}" if xs else f"({coeff})"
                negative = False
            if not chunks:
                chunks.append(f"-{body}" if negative else body)
            else:
                chunks.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"Element({self})"


@dataclass(frozen=True)
class OverlapFailure:
    gen: str
    residual: Element

    def describe(self) -> str:
        return f"generator {self.gen}: residual {self.residual}"


@dataclass(frozen=True)
class OverlapReport:
    ok: bool
    failures: Tuple[OverlapFailure, ...]

    def describe(self) -> str:
        if self.ok:
            return "pass"
        return "fail: " + "; ".join(f.describe() for f in self.failures)


@dataclass(frozen=True)
class GradingReport:
    graded: bool
    connected: bool
    problems: Tuple[str, ...]


@dataclass(frozen=True)
class DegreeResult:
    homogeneous: bool
    degree: Optional[int]
    term_degrees: frozenset


class DOEPresentation:
    """Presentation data plus the cached consistency verdict and the
    rewriting engine for normal-form products."""

    def __init__(self, ring: Ring, maps: StructureMaps, p12, p11,
                 tau1: Poly = None, tau2: Poly = None, tau0: Poly = None,
                 x_degrees: Tuple[int, int] = (1, 1)):
        if maps.ring != ring:
            raise DescriptorMismatchError("maps over a different base ring")
        self.ring = ring
        self.maps = maps
        self.p12 = as_scalar(p12)
        self.p11 = as_scalar(p11)
        self.tau1 = self._tau(tau1)
        self.tau2 = self._tau(tau2)
        self.tau0 = self._tau(tau0)
        x_degrees = (int(x_degrees[0]), int(x_degrees[1]))
        if x_degrees != (1, 1):
            raise ValueError("only deg(x1) = deg(x2) = 1 is supported")
        self.x_degrees = x_degrees
        self.steps_r1 = 0
        self.steps_r2 = 0
        self._r1_cache = None
        self._grading = None
        self._overlap = None
        self._consistency = self._compute_consistency()

    def _tau(self, p) -> Poly:
        if p is None:
            return self.ring.zero()
        if isinstance(p, Poly):
            if p.ring != self.ring:
                raise DescriptorMismatchError("tail entry over a different base ring")
            return p
        return self.ring.const(as_scalar(p))

    # -- consistency ---------------------------------------------------------

    def _compute_consistency(self) -> Verdict:
        if not self.maps.sigma_hom_report().ok:
            return Verdict.failed("sigma is not an algebra homomorphism: "
                                  + self.maps.sigma_hom_report().describe())
        if not self.maps.delta_derivation_report().ok:
            return Verdict.failed("delta is not a sigma-derivation: "
                                  + self.maps.delta_derivation_report().describe())
        overlap = self._compute_overlap()
        self._overlap = overlap
        if not overlap.ok:
            return Verdict.failed("overlap check failed: " + overlap.describe())
        return Verdict.passed("sigma homomorphism, delta derivation and overlap all hold")

    def consistency(self) -> Verdict:
        return self._consistency

    @property
    def is_consistent(self) -> bool:
        return self._consistency.is_pass

    def require_consistent(self):
        if not self.is_consistent:
            raise InconsistentPresentationError(
                "normal-form arithmetic refused: " + self._consistency.reason)

    def sigma_hom_report(self):
        return self.maps.sigma_hom_report()

    def delta_derivation_report(self):
        return self.maps.delta_derivation_report()

    def overlap_report(self) -> OverlapReport:
        """Overlap x2*x1*t_k reduced mixing-rule-first versus
        straightening-first; requires both map checks to have passed."""
        if self._overlap is None:
            if not self.maps.sigma_hom_report().ok or not self.maps.checks_pass():
                raise InconsistentMapsError(
                    "overlap check requires the sigma and delta checks to pass")
            self._overlap = self._compute_overlap()
        return self._overlap

    def _compute_overlap(self) -> OverlapReport:
        targets = [(self.ring.names[k], self.ring.gen(k))
                   for k in range(self.ring.ngens)]
        if not targets:
            targets = [("1", self.ring.one())]
        failures = []
        for name, r in targets:
            via_mixing = self._mul(self._r1_elem(), self.from_poly(r))
            via_straightening = self._letter_times_element(
                2, self._letter_times_poly(1, r))
            residual = via_mixing - via_straightening
            if not residual.is_zero:
                failures.append(OverlapFailure(name, residual))
        return OverlapReport(not failures, tuple(failures))

    # -- element constructors -------------------------------------------------

    def zero_element(self) -> Element:
        return Element(self.ring, ())

    def one(self) -> Element:
        return Element(self.ring, {(0, 0): self.ring.one()})

    def from_poly(self, r: Poly) -> Element:
        return Element(self.ring, {(0, 0): r})

    def x(self, i: int) -> Element:
        if i not in (1, 2):
            raise ValueError("extension variable index must be 1 or 2")
        return Element(self.ring, {(1, 0) if i == 1 else (0, 1): self.ring.one()})

    def monomial_element(self, a1: int, a2: int, coeff=1) -> Element:
        return Element(self.ring, {(a1, a2): coeff if isinstance(coeff, Poly)
                                   else self.ring.const(as_scalar(coeff))})

    # -- public arithmetic -----------------------------------------------------

    def x_times_ring(self, i: int, r: Poly) -> Element:
        """x_i * r straightened: s_i1(r)x1 + s_i2(r)x2 + d_i(r)."""
        self.require_consistent()
        if i not in (1, 2):
            raise ValueError("extension variable index must be 1 or 2")
        return self._letter_times_poly(i, r)

    def multiply(self, u: Element, v: Element) -> Element:
        self.require_consistent()
        if u.ring != self.ring or v.ring != self.ring:
            raise DescriptorMismatchError("elements over a different base ring")
        return self._mul(u, v)

    def power(self, u: Element, n: int) -> Element:
        if n < 0:
            raise ValueError("negative powers are not defined here")
        out = self.one()
        for _ in range(n):
            out = self.multiply(out, u)
        return out

    # -- rewriting engine (no consistency gate; used by the overlap check) ----

    def _r1_elem(self) -> Element:
        if self._r1_cache is None:
            self._r1_cache = Element(self.ring, {
                (1, 1): self.ring.const(self.p12),
                (2, 0): self.ring.const(self.p11),
                (1, 0): self.tau1,
                (0, 1): self.tau2,
                (0, 0): self.tau0,
            })
        return self._r1_cache

    def _letter_times_poly(self, i: int, r: Poly) -> Element:
        if r.is_constant:
            return Element(self.ring, {(1, 0) if i == 1 else (0, 1): r})
        self.steps_r2 += 1
        s = self.maps.apply_sigma(r)
        d = self.maps.apply_delta(r)
        row = s[i - 1]
        return Element(self.ring, {(1, 0): row[0], (0, 1): row[1],
                                   (0, 0): d[i - 1]})

    def _letter_times_mono(self, i: int, mono: XMono) -> Element:
        a1, a2 = mono
        if i == 1:
            return Element(self.ring, {(a1 + 1, a2): self.ring.one()})
        if a1 == 0:
            return Element(self.ring, {(0, a2 + 1): self.ring.one()})
        # x2*x1 inversion removed by the mixing rule; recursion on fewer x1's.
        self.steps_r1 += 1
        return self._element_times_mono(self._r1_elem(), (a1 - 1, a2))

    def _mono_times_mono(self, a: XMono, b: XMono) -> Element:
        a1, a2 = a
        b1, b2 = b
        if a2 == 0 or b1 == 0:
            return Element(self.ring, {(a1 + b1, a2 + b2): self.ring.one()})
        mid = self._letter_times_mono(2, (b1, 0))
        mid = self._element_times_mono(mid, (0, b2))
        return self._mono_times_element((a1, a2 - 1), mid)

    def _element_times_mono(self, u: Element, b: XMono) -> Element:
        if b == (0, 0):
            return u
        out = self.zero_element()
        for mono, coeff in sorted(u.terms.items()):
            out = out + self._mono_times_mono(mono, b).scale(coeff)
        return out

    def _mono_times_element(self, a: XMono, u: Element) -> Element:
        if a == (0, 0):
            return u
        out = self.zero_element()
        for mono, coeff in sorted(u.terms.items()):
            moved = self._xmono_times_poly(a, coeff)
            out = out + self._element_times_mono(moved, mono)
        return out

    def _xmono_times_poly(self, a: XMono, r: Poly) -> Element:
        if a == (0, 0):
            return self.from_poly(r)
        if r.is_constant:
            return Element(self.ring, {a: r})
        a1, a2 = a
        if a2 > 0:
            i, front = 2, (a1, a2 - 1)
        else:
            i, front = 1, (a1 - 1, 0)
        return self._mono_times_element(front, self._letter_times_poly(i, r))

    def _letter_times_element(self, i: int, u: Element) -> Element:
        out = self.zero_element()
        for mono, coeff in sorted(u.terms.items()):
            out = out + self._element_times_mono(
                self._letter_times_poly(i, coeff), mono)
        return out

    def _mul(self, u: Element, v: Element) -> Element:
        out = self.zero_element()
        for mono, coeff in sorted(u.terms.items()):
            out = out + self._mono_times_element(mono, v).scale(coeff)
        return out

    # -- grading ----------------------------------------------------------------

    def grading(self) -> GradingReport:
        """Graded iff every defining relation is homogeneous with
        deg(x1) = deg(x2) = 1; connectedness comes with positive generator
        degrees."""
        if self._grading is None:
            problems = list(self.maps.graded_failures())
            for label, tau, want in (("tau1", self.tau1, 1),
                                     ("tau2", self.tau2, 1),
                                     ("tau0", self.tau0, 2)):
                if not tau.is_homogeneous(want):
                    problems.append(
                        f"{label} = {tau} is not homogeneous of degree {want}")
            self._grading = GradingReport(not problems,
                                          self.ring.is_connected(),
                                          tuple(problems))
        return self._grading

    def is_trimmed(self) -> bool:
        return (self.maps.delta_is_zero() and self.tau1.is_zero
                and self.tau2.is_zero and self.tau0.is_zero)

    def element_degree(self, u: Element) -> DegreeResult:
        degs = set()
        for (a1, a2), coeff in u.terms.items():
            for d in coeff.term_degrees():
                degs.add(d + a1 + a2)
        if not degs:
            return DegreeResult(True, None, frozenset())
        if len(degs) == 1:
            return DegreeResult(True, next(iter(degs)), frozenset(degs))
        return DegreeResult(False, None, frozenset(degs))

    # -- determinant of sigma -----------------------------------------------------

    def det_sigma(self, r: Poly) -> Poly:
        return det_sigma_maps(self.maps, self.p12, self.p11, r)

    def det_sigma_endo(self) -> DetSigmaReport:
        return det_sigma_endo_maps(self.maps, self.p12, self.p11)

    # -- identity -------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, DOEPresentation):
            return NotImplemented
        return (self.ring == other.ring and self.maps == other.maps
                and self.p12 == other.p12 and self.p11 == other.p11
                and self.tau1 == other.tau1 and self.tau2 == other.tau2
                and self.tau0 == other.tau0 and self.x_degrees == other.x_degrees)

    __hash__ = None

    def __repr__(self):
        return (f"DOEPresentation({self.ring!r}, p12={self.p12}, p11={self.p11}, "
                f"tau=({self.tau1}, {self.tau2}, {self.tau0}))")


# Functional surface mirroring the operation names.

def x_times_ring(pres: DOEPresentation, i: int, r: Poly) -> Element:
    return pres.x_times_ring(i, r)


def multiply(pres: DOEPresentation, u: Element, v: Element) -> Element:
    return pres.multiply(u, v)


def overlap_consistency_check(pres: DOEPresentation) -> OverlapReport:
    return pres.overlap_report()


def grading_check(pres: DOEPresentation) -> GradingReport:
    return pres.grading()


def element_degree(pres: DOEPresentation, u: Element) -> DegreeResult:
    return pres.element_degree(u)


def det_sigma(pres: DOEPresentation, r: Poly) -> Poly:
    return pres.det_sigma(r)


def det_sigma_endo(pres: DOEPresentation) -> DetSigmaReport:
    return pres.det_sigma_endo()
