"""Structure maps for two-variable extensions of a commutative base ring.

sigma sends each base generator to a 2x2 matrix over R and extends to an
algebra map R -> M2(R) exactly when the generator matrices pairwise commute;
delta sends each generator to a column in R^2 and extends by the twisted
Leibniz rule delta(rs) = sigma(r)delta(s) + delta(r)s once its own pair
condition holds.  Both conditions are checked, never assumed: the check
reports list every failing generator pair together with the difference.

The determinant of sigma with respect to the parameter (p12, p11) is

    det(r) = -p11*s12(s11(r)) + s22(s11(r)) - p12*s12(s21(r))

where sij(u) denotes the (i,j) entry of sigma(u).  On consistent data it is
an algebra endomorphism of R; `det_sigma_endo` packages its generator images
and verifies multiplicativity on all generator pairs rather than trusting it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import DescriptorMismatchError, InconsistentMapsError
from .poly import Poly, Ring, as_scalar
from .verdict import Verdict

Mat = Tuple[Tuple[Poly, Poly], Tuple[Poly, Poly]]
Col = Tuple[Poly, Poly]


def mat_identity(ring: Ring) -> Mat:
    one, zero = ring.one(), ring.zero()
    return ((one, zero), (zero, one))


def mat_scale_identity(r: Poly) -> Mat:
    zero = r.ring.zero()
    return ((r, zero), (zero, r))


def mat_add(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_mul(a: Mat, b: Mat) -> Mat:
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(2)), a[i][0].ring.zero())
              for j in range(2))
        for i in range(2))


def mat_is_zero(a: Mat) -> bool:
    return all(x.is_zero for row in a for x in row)


def mat_apply(a: Mat, col: Col) -> Col:
    return (a[0][0] * col[0] + a[0][1] * col[1],
            a[1][0] * col[0] + a[1][1] * col[1])


def col_add(a: Col, b: Col) -> Col:
    return (a[0] + b[0], a[1] + b[1])


def col_sub(a: Col, b: Col) -> Col:
    return (a[0] - b[0], a[1] - b[1])


def col_scale(a: Col, r) -> Col:
    return (a[0] * r, a[1] * r)


def col_is_zero(a: Col) -> bool:
    return a[0].is_zero and a[1].is_zero


@dataclass(frozen=True)
class PairFailure:
    """One failing generator pair, with the nonzero difference."""
    gen_i: str
    gen_j: str
    diff: tuple

    def describe(self) -> str:
        if isinstance(self.diff, Poly):
            body = str(self.diff)
        elif len(self.diff) == 2 and isinstance(self.diff[0], Poly):
            body = f"({self.diff[0]}, {self.diff[1]})"
        else:
            body = "[" + "; ".join(", ".join(str(x) for x in row) for row in self.diff) + "]"
        return f"pair ({self.gen_i}, {self.gen_j}): difference {body}"


@dataclass(frozen=True)
class PairCheckReport:
    ok: bool
    failures: Tuple[PairFailure, ...]

    def describe(self) -> str:
        if self.ok:
            return "pass"
        return "fail: " + "; ".join(f.describe() for f in self.failures)


class StructureMaps:
    """Generator images of sigma (2x2 matrices) and delta (columns) over R.

    Defaults give the central structure: sigma(t_k) = t_k * identity and
    delta = 0.
    """

    __slots__ = ("ring", "sigma", "delta", "_sigma_report", "_delta_report",
                 "_delta_cache")

    def __init__(self, ring: Ring, sigma=None, delta=None):
        self.ring = ring
        m = ring.ngens
        if sigma is None:
            sigma = tuple(mat_scale_identity(ring.gen(k)) for k in range(m))
        else:
            sigma = tuple(tuple(tuple(self._as_poly(p) for p in row) for row in mat)
                          for mat in sigma)
        if delta is None:
            delta = tuple((ring.zero(), ring.zero()) for _ in range(m))
        else:
            delta = tuple(tuple(self._as_poly(p) for p in col) for col in delta)
        if len(sigma) != m or any(len(mat) != 2 or any(len(row) != 2 for row in mat)
                                  for mat in sigma):
            raise ValueError("sigma needs one 2x2 matrix per generator")
        if len(delta) != m or any(len(col) != 2 for col in delta):
            raise ValueError("delta needs one column pair per generator")
        self.sigma = sigma
        self.delta = delta
        self._sigma_report = None
        self._delta_report = None
        self._delta_cache = {}

    def _as_poly(self, p) -> Poly:
        if isinstance(p, Poly):
            if p.ring != self.ring:
                raise DescriptorMismatchError("structure-map image over a different ring")
            return p
        return self.ring.const(as_scalar(p))

    # -- consistency checks -------------------------------------------------

    def sigma_hom_report(self) -> PairCheckReport:
        """Pairwise commutation of the generator matrices; necessary and
        sufficient for sigma to extend to an algebra map on commutative R."""
        if self._sigma_report is None:
            failures = []
            for j in range(self.ring.ngens):
                for k in range(j + 1, self.ring.ngens):
                    diff = mat_sub(mat_mul(self.sigma[j], self.sigma[k]),
                                   mat_mul(self.sigma[k], self.sigma[j]))
                    if not mat_is_zero(diff):
                        failures.append(PairFailure(
                            self.ring.names[j], self.ring.names[k], diff))
            self._sigma_report = PairCheckReport(not failures, tuple(failures))
        return self._sigma_report

    def delta_derivation_report(self) -> PairCheckReport:
        """Well-definedness of delta on t_j t_k = t_k t_j:
        sigma(t_j)delta(t_k) + delta(t_j)t_k must be symmetric in (j, k)."""
        if not self.sigma_hom_report().ok:
            raise InconsistentMapsError(
                "sigma homomorphism check failed; the derivation check is undefined")
        if self._delta_report is None:
            failures = []
            for j in range(self.ring.ngens):
                for k in range(j + 1, self.ring.ngens):
                    lhs = col_add(mat_apply(self.sigma[j], self.delta[k]),
                                  col_scale(self.delta[j], self.ring.gen(k)))
                    rhs = col_add(mat_apply(self.sigma[k], self.delta[j]),
                                  col_scale(self.delta[k], self.ring.gen(j)))
                    diff = col_sub(lhs, rhs)
                    if not col_is_zero(diff):
                        failures.append(PairFailure(
                            self.ring.names[j], self.ring.names[k], diff))
            self._delta_report = PairCheckReport(not failures, tuple(failures))
        return self._delta_report

    def checks_pass(self) -> bool:
        if not self.sigma_hom_report().ok:
            return False
        return self.delta_derivation_report().ok

    # -- evaluation ----------------------------------------------------------

    def apply_sigma(self, r: Poly) -> Mat:
        """sigma(r) by substituting the commuting generator matrices into r."""
        if not self.sigma_hom_report().ok:
            raise InconsistentMapsError(
                "sigma generator matrices do not commute; sigma(r) is order-dependent")
        if r.ring != self.ring:
            raise DescriptorMismatchError("sigma applied to a foreign polynomial")
        zero = self.ring.zero()
        acc = ((zero, zero), (zero, zero))
        for exps, c in sorted(r.terms.items()):
            term = mat_scale_identity(self.ring.const(c))
            for k, e in enumerate(exps):
                for _ in range(e):
                    term = mat_mul(term, self.sigma[k])
            acc = mat_add(acc, term)
        return acc

    def apply_delta(self, r: Poly) -> Col:
        """delta(r) by the twisted Leibniz rule, splitting monomials at the
        leftmost generator; the derivation check guarantees order independence."""
        if not self.delta_derivation_report().ok:
            raise InconsistentMapsError(
                "delta derivation check failed; delta(r) is order-dependent")
        if r.ring != self.ring:
            raise DescriptorMismatchError("delta applied to a foreign polynomial")
        acc = (self.ring.zero(), self.ring.zero())
        for exps, c in sorted(r.terms.items()):
            acc = col_add(acc, col_scale(self._delta_mono(exps), c))
        return acc

    def _delta_mono(self, exps) -> Col:
        cached = self._delta_cache.get(exps)
        if cached is not None:
            return cached
        k = next((i for i, e in enumerate(exps) if e), None)
        if k is None:
            col = (self.ring.zero(), self.ring.zero())
        else:
            rest = tuple(e - 1 if i == k else e for i, e in enumerate(exps))
            # delta(t_k * u) = sigma(t_k) delta(u) + delta(t_k) u
            col = col_add(mat_apply(self.sigma[k], self._delta_mono(rest)),
                          col_scale(self.delta[k], self.ring.monomial(rest)))
        self._delta_cache[exps] = col
        return col

    # -- structural queries ---------------------------------------------------

    def delta_is_zero(self) -> bool:
        return all(col_is_zero(col) for col in self.delta)

    def off_diagonal_failure(self) -> Optional[str]:
        """Name of the first nonzero off-diagonal generator image, or None."""
        for k, mat in enumerate(self.sigma):
            if not mat[0][1].is_zero:
                return f"sigma12({self.ring.names[k]}) != 0"
            if not mat[1][0].is_zero:
                return f"sigma21({self.ring.names[k]}) != 0"
        return None

    def diagonal_endos(self) -> Tuple["Endo", "Endo"]:
        """Component endomorphism descriptors from the diagonal images."""
        s1 = Endo(self.ring, tuple(mat[0][0] for mat in self.sigma))
        s2 = Endo(self.ring, tuple(mat[1][1] for mat in self.sigma))
        return s1, s2

    def is_identity_diagonal(self) -> bool:
        return all(mat == mat_scale_identity(self.ring.gen(k))
                   for k, mat in enumerate(self.sigma))

    def graded_failures(self, x_degree_shift: int = 1):
        """Relation-homogeneity defects of sigma/delta with deg x1 = deg x2 = 1.

        Each sigma(t_k) entry must be homogeneous of degree deg(t_k) and each
        delta(t_k) entry homogeneous of degree deg(t_k) + 1.
        """
        problems = []
        labels = (("sigma11", "sigma12"), ("sigma21", "sigma22"))
        for k, mat in enumerate(self.sigma):
            d = self.ring.degrees[k]
            name = self.ring.names[k]
            for i in range(2):
                for j in range(2):
                    if not mat[i][j].is_homogeneous(d):
                        problems.append(
                            f"{labels[i][j]}({name}) = {mat[i][j]} is not homogeneous of degree {d}")
        for k, col in enumerate(self.delta):
            d = self.ring.degrees[k] + x_degree_shift
            name = self.ring.names[k]
            for i in range(2):
                if not col[i].is_homogeneous(d):
                    problems.append(
                        f"delta{i + 1}({name}) = {col[i]} is not homogeneous of degree {d}")
        return problems

    def __eq__(self, other):
        if not isinstance(other, StructureMaps):
            return NotImplemented
        return (self.ring == other.ring and self.sigma == other.sigma
                and self.delta == other.delta)

    __hash__ = None


@dataclass(frozen=True)
class Endo:
    """A K-algebra endomorphism of R given by its generator images."""

    ring: Ring
    images: Tuple[Poly, ...]

    def apply(self, r: Poly) -> Poly:
        out = self.ring.zero()
        for exps, c in r.terms.items():
            term = self.ring.const(c)
            for k, e in enumerate(exps):
                term = term * self.images[k] ** e
            out = out + term
        return out

    def is_identity(self) -> bool:
        return all(img == self.ring.gen(k) for k, img in enumerate(self.images))

    def is_graded(self) -> bool:
        return all(img.is_homogeneous(self.ring.degrees[k])
                   for k, img in enumerate(self.images))

    def scalar_factors(self):
        """Factors c_k when every image is c_k * t_k, else None."""
        out = []
        for k, img in enumerate(self.images):
            exps = tuple(1 if i == k else 0 for i in range(self.ring.ngens))
            if set(img.terms) - {exps}:
                return None
            out.append(img.terms.get(exps, Fraction(0)))
        return out

    def linear_matrix(self):
        """Matrix on the degree-1 slice when every image is a linear form and
        every generator has degree 1; columns indexed by generators."""
        if any(d != 1 for d in self.ring.degrees):
            return None
        cols = []
        for img in self.images:
            vec = img.linear_coeffs()
            if vec is None:
                return None
            cols.append(vec)
        return cols

    def bijectivity(self) -> Verdict:
        """Exact decision in the identity / scalar-diagonal / graded-linear
        cases; everything else is reported unknown, never guessed.

        In those cases injectivity (r != 0 implies image != 0) and being an
        automorphism coincide, so one verdict serves both questions.
        """
        if self.ring.ngens == 0:
            return Verdict.passed("identity on the ground field")
        if self.is_identity():
            return Verdict.passed("identity map")
        factors = self.scalar_factors()
        if factors is not None:
            for k, c in enumerate(factors):
                if not c:
                    return Verdict.failed(f"maps {self.ring.names[k]} to 0")
            return Verdict.passed("diagonal scaling by nonzero factors")
        cols = self.linear_matrix()
        if cols is not None:
            if _det(cols):
                return Verdict.passed("invertible linear substitution")
            return Verdict.failed("singular linear substitution on the degree-1 slice")
        return Verdict.undecided(
            "injectivity undecided outside the graded-linear case")

    def __str__(self):
        if not self.images:
            return "identity on Q"
        return ", ".join(f"{name} -> {img}"
                         for name, img in zip(self.ring.names, self.images))


def _det(cols) -> Fraction:
    """Determinant of a small column-major rational matrix by elimination."""
    n = len(cols)
    a = [[cols[j][i] for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if a[r][i]), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            a[i], a[piv] = a[piv], a[i]
            det = -det
        det *= a[i][i]
        inv = Fraction(1) / a[i][i]
        for r in range(i + 1, n):
            f = a[r][i] * inv
            if f:
                for c in range(i, n):
                    a[r][c] -= f * a[i][c]
    return det


# -- determinant of sigma ----------------------------------------------------

def det_sigma_maps(maps: StructureMaps, p12, p11, r: Poly) -> Poly:
    """det(r) = -p11*s12(s11(r)) + s22(s11(r)) - p12*s12(s21(r))."""
    p12 = as_scalar(p12)
    p11 = as_scalar(p11)
    s = maps.apply_sigma(r)
    of11 = maps.apply_sigma(s[0][0])
    of21 = maps.apply_sigma(s[1][0])
    return of11[0][1] * (-p11) + of11[1][1] - of21[0][1] * p12


@dataclass(frozen=True)
class DetSigmaReport:
    """Generator images of det sigma with verified multiplicativity."""

    endo: Endo
    multiplicative: PairCheckReport
    invertible: Verdict


def det_sigma_endo_maps(maps: StructureMaps, p12, p11) -> DetSigmaReport:
    ring = maps.ring
    images = tuple(det_sigma_maps(maps, p12, p11, ring.gen(k))
                   for k in range(ring.ngens))
    endo = Endo(ring, images)
    failures = []
    for j in range(ring.ngens):
        for k in range(j, ring.ngens):
            lhs = det_sigma_maps(maps, p12, p11, ring.gen(j) * ring.gen(k))
            rhs = images[j] * images[k]
            diff = lhs - rhs
            if not diff.is_zero:
                failures.append(PairFailure(ring.names[j], ring.names[k], diff))
    report = PairCheckReport(not failures, tuple(failures))
    return DetSigmaReport(endo, report, endo.bijectivity())


# Functional surface mirroring the operation names.

def check_sigma_hom(maps: StructureMaps) -> PairCheckReport:
    return maps.sigma_hom_report()


def check_delta_derivation(maps: StructureMaps) -> PairCheckReport:
    return maps.delta_derivation_report()


def apply_sigma(maps: StructureMaps, r: Poly) -> Mat:
    return maps.apply_sigma(r)


def apply_delta(maps: StructureMaps, r: Poly) -> Col:
    return maps.apply_delta(r)
