"""Classification of presentations and the two-sided dictionary.

`classify` fills a full report: validity of the presentation, gradedness,
trimmedness, the structural skew-PBW test (diagonal sigma with injective
components, p12 != 0, p11 = 0), the quasi-commutative / derivation-type /
endomorphism-type / constant subclasses, bijectivity, and the determinant
route to a two-sided double extension.

`doe_to_spbw` and `spbw_to_doe` convert between the two shapes of the same
data; the composite is the identity on every view that satisfies the
preconditions.  `check_graded_biconditional` and `check_trimmed_biconditional`
decide the two equivalences for connected graded input and must agree with
the structural tests; that agreement is itself a tested property.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import RefusalError
from .extension import DOEPresentation, Element
from .maps import Endo, StructureMaps
from .poly import Poly, Ring
from .verdict import Verdict


@dataclass(frozen=True)
class ClassificationReport:
    is_right_doe: Verdict
    is_double_via_det: Verdict
    is_trimmed: bool
    is_graded: bool
    is_connected: bool
    is_spbw: Verdict
    is_quasi_commutative: bool
    is_bijective: Verdict
    is_derivation_type: bool
    is_endomorphism_type: bool
    is_constant: bool
    theorem_citations: Tuple[str, ...]


@dataclass(frozen=True)
class SPBWView:
    """x1*r = sigma1(r)*x1 + delta1(r), x2*r = sigma2(r)*x2 + delta2(r),
    x2*x1 = c12*x1*x2 + r1*x1 + r2*x2 + r0; c21 = 1/c12 closes the reverse
    relation."""

    ring: Ring
    sigma1: Endo
    sigma2: Endo
    delta1: Tuple[Poly, ...]
    delta2: Tuple[Poly, ...]
    c12: Fraction
    c21: Fraction
    r1: Poly
    r2: Poly
    r0: Poly


def _structural_spbw(pres: DOEPresentation):
    """The structural test behind the skew-PBW verdicts.

    Returns (verdict, endo1, endo2); the endos are meaningful only when the
    off-diagonal images vanish.
    """
    if pres.p12 == 0:
        return Verdict.failed("p12 = 0"), None, None
    if pres.p11 != 0:
        return Verdict.failed("p11 != 0"), None, None
    off = pres.maps.off_diagonal_failure()
    if off is not None:
        return Verdict.failed(off), None, None
    endo1, endo2 = pres.maps.diagonal_endos()
    v1 = endo1.bijectivity()
    v2 = endo2.bijectivity()
    if v1.is_fail:
        return Verdict.failed(f"sigma11 not injective: {v1.reason}"), endo1, endo2
    if v2.is_fail:
        return Verdict.failed(f"sigma22 not injective: {v2.reason}"), endo1, endo2
    if v1.is_unknown or v2.is_unknown:
        return (Verdict.undecided(
            "sigma11/sigma22 injectivity undecided outside the graded-linear case"),
            endo1, endo2)
    return (Verdict.passed(
        "diagonal sigma with injective components, p12 != 0 and p11 = 0"),
        endo1, endo2)


def classify(pres: DOEPresentation) -> ClassificationReport:
    """Total and deterministic: every presentation yields a report, with
    "unknown" only where injectivity is genuinely undecidable here."""
    cons = pres.consistency()
    grading = pres.grading()
    trimmed = pres.is_trimmed()
    spbw, endo1, endo2 = _structural_spbw(pres)

    if endo1 is None:
        endo1, endo2 = pres.maps.diagonal_endos()
    identity_diag = pres.maps.is_identity_diagonal()
    delta_zero = pres.maps.delta_is_zero()

    quasi = spbw.is_pass and trimmed
    derivation_type = identity_diag
    endomorphism_type = delta_zero
    constant = identity_diag and delta_zero

    if spbw.is_fail:
        bijective = Verdict.failed("not in skew PBW form: " + spbw.reason)
    elif spbw.is_unknown:
        bijective = Verdict.undecided(spbw.reason)
    else:
        v1, v2 = endo1.bijectivity(), endo2.bijectivity()
        if v1.is_pass and v2.is_pass:
            bijective = Verdict.passed(
                "sigma11 and sigma22 bijective, mixing constant p12 invertible")
        else:
            bijective = Verdict.undecided(v1.reason if v1.is_unknown else v2.reason)

    via_det = is_double_via_det(pres)

    citations = []
    if cons.is_pass:
        citations.append(
            "validity: commuting sigma matrices, a matching twisted derivation "
            "and a confluent generator overlap define the extension with a free "
            "left PBW basis")
    if spbw.is_pass:
        citations.append(
            "skew PBW form: diagonal sigma with injective components and "
            "p12 != 0, p11 = 0 turns both straightening rules into "
            "x_i r = c_{i,r} x_i + (lower order)")
    if spbw.is_pass and grading.graded and grading.connected:
        citations.append(
            "graded case: connected graded data with diagonal automorphisms is "
            "a graded skew PBW extension, and conversely")
    if quasi:
        citations.append(
            "quasi-commutative case: trimmed data (delta = 0, tau = 0) with the "
            "conditions above drops all lower-order terms")
    if via_det.is_pass:
        citations.append(
            "two-sided: connected graded with p12 != 0 and invertible det sigma "
            "makes sigma invertible, so the extension is two-sided")

    return ClassificationReport(
        is_right_doe=cons,
        is_double_via_det=via_det,
        is_trimmed=trimmed,
        is_graded=grading.graded,
        is_connected=grading.connected,
        is_spbw=spbw,
        is_quasi_commutative=quasi,
        is_bijective=bijective,
        is_derivation_type=derivation_type,
        is_endomorphism_type=endomorphism_type,
        is_constant=constant,
        theorem_citations=tuple(citations),
    )


def doe_to_spbw(pres: DOEPresentation) -> SPBWView:
    """Extract the skew-PBW data; refuses unless the structural test passes,
    naming the violated condition."""
    spbw, endo1, endo2 = _structural_spbw(pres)
    if not spbw.is_pass:
        raise RefusalError(f"not presentable in skew PBW form: {spbw.reason}")
    delta1 = tuple(col[0] for col in pres.maps.delta)
    delta2 = tuple(col[1] for col in pres.maps.delta)
    return SPBWView(
        ring=pres.ring,
        sigma1=endo1,
        sigma2=endo2,
        delta1=delta1,
        delta2=delta2,
        c12=pres.p12,
        c21=Fraction(1) / pres.p12,
        r1=pres.tau1,
        r2=pres.tau2,
        r0=pres.tau0,
    )


def spbw_to_doe(view: SPBWView, ring: Ring = None) -> DOEPresentation:
    """Assemble the presentation with sigma = diag(sigma1, sigma2),
    parameter (c12, 0) and tail (r1, r2, r0); graded connected input only."""
    ring = view.ring if ring is None else ring
    if ring != view.ring:
        raise RefusalError("view and ring descriptors disagree")
    if view.c12 == 0:
        raise RefusalError("c12 = 0")
    if not ring.is_connected():
        raise RefusalError("base ring is not connected")
    zero = ring.zero()
    sigma = tuple(((view.sigma1.images[k], zero), (zero, view.sigma2.images[k]))
                  for k in range(ring.ngens))
    delta = tuple((view.delta1[k], view.delta2[k]) for k in range(ring.ngens))
    maps = StructureMaps(ring, sigma=sigma, delta=delta)
    pres = DOEPresentation(ring, maps, p12=view.c12, p11=0,
                           tau1=view.r1, tau2=view.r2, tau0=view.r0)
    grading = pres.grading()
    if not grading.graded:
        raise RefusalError("inhomogeneous relations: " + "; ".join(grading.problems))
    return pres


def _four_conditions(pres: DOEPresentation) -> Verdict:
    """p12 != 0, p11 = 0, off-diagonal sigma zero, diagonal automorphisms."""
    if pres.p12 == 0:
        return Verdict.failed("p12 = 0")
    if pres.p11 != 0:
        return Verdict.failed("p11 != 0")
    off = pres.maps.off_diagonal_failure()
    if off is not None:
        return Verdict.failed(off)
    endo1, endo2 = pres.maps.diagonal_endos()
    v1, v2 = endo1.bijectivity(), endo2.bijectivity()
    if v1.is_fail:
        return Verdict.failed(f"sigma11 is not an automorphism: {v1.reason}")
    if v2.is_fail:
        return Verdict.failed(f"sigma22 is not an automorphism: {v2.reason}")
    if v1.is_unknown or v2.is_unknown:
        return Verdict.undecided(
            "sigma11/sigma22 automorphism status undecided outside the graded-linear case")
    return Verdict.passed(
        "p12 != 0, p11 = 0, sigma diagonal with automorphism components")


def check_graded_biconditional(pres: DOEPresentation) -> Verdict:
    """For connected graded presentations: skew PBW iff the four conditions
    hold.  Refuses when the hypotheses are unmet."""
    grading = pres.grading()
    if not grading.graded:
        raise RefusalError("hypothesis unmet: presentation is not graded")
    if not grading.connected:
        raise RefusalError("hypothesis unmet: base ring is not connected")
    return _four_conditions(pres)


def check_trimmed_biconditional(pres: DOEPresentation) -> Verdict:
    """Trimmed connected graded presentations: quasi-commutative skew PBW iff
    the same four conditions hold."""
    grading = pres.grading()
    if not grading.graded:
        raise RefusalError("hypothesis unmet: presentation is not graded")
    if not grading.connected:
        raise RefusalError("hypothesis unmet: base ring is not connected")
    if not pres.is_trimmed():
        raise RefusalError("hypothesis unmet: presentation is not trimmed "
                           "(delta or tau nonzero)")
    return _four_conditions(pres)


def is_double_via_det(pres: DOEPresentation) -> Verdict:
    """Two-sidedness through the determinant: pass when the presentation is a
    valid connected graded right extension with p12 != 0 and invertible
    det sigma; anything short of that is unknown, never a guessed fail."""
    if not pres.consistency().is_pass:
        return Verdict.undecided("hypothesis unmet: consistency checks fail")
    grading = pres.grading()
    if not (grading.graded and grading.connected):
        return Verdict.undecided("hypothesis unmet: not connected graded")
    if pres.p12 == 0:
        return Verdict.undecided("hypothesis unmet: p12 = 0")
    det = pres.det_sigma_endo()
    if det.invertible.is_pass:
        return Verdict.passed(
            "connected graded, p12 != 0 and det sigma invertible: a two-sided "
            "double extension")
    return Verdict.undecided(f"det sigma invertibility: {det.invertible}")
