"""Report documents: canonical JSON plus aligned human text.

The machine form uses fixed field names, sorted keys and rationals encoded as
{"num": "...", "den": "..."} strings, so identical inputs produce
byte-identical output across reruns.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .classify import ClassificationReport
from .extension import DOEPresentation, GradingReport, OverlapReport
from .maps import DetSigmaReport, PairCheckReport
from .verdict import Verdict


def scalar_json(c: Fraction) -> dict:
    return {"num": str(c.numerator), "den": str(c.denominator)}


def verdict_json(v: Verdict) -> dict:
    return {"status": v.status, "reason": v.reason}


def pair_check_json(rep: PairCheckReport) -> dict:
    return {
        "status": "pass" if rep.ok else "fail",
        "failures": [f.describe() for f in rep.failures],
    }


def overlap_json(rep: OverlapReport) -> dict:
    return {
        "status": "pass" if rep.ok else "fail",
        "failures": [{"generator": f.gen, "residual": str(f.residual)}
                     for f in rep.failures],
    }


def consistency_json(pres: DOEPresentation) -> dict:
    """The three-stage check with later stages marked not_run on failure."""
    sigma = pres.sigma_hom_report()
    out = {"sigma_hom": pair_check_json(sigma)}
    if sigma.ok:
        delta = pres.delta_derivation_report()
        out["delta_derivation"] = pair_check_json(delta)
        if delta.ok:
            out["overlap"] = overlap_json(pres.overlap_report())
        else:
            out["overlap"] = {"status": "not_run", "failures": []}
    else:
        out["delta_derivation"] = {"status": "not_run", "failures": []}
        out["overlap"] = {"status": "not_run", "failures": []}
    out["consistent"] = pres.is_consistent
    return out


def grading_json(rep: GradingReport) -> dict:
    return {"graded": rep.graded, "connected": rep.connected,
            "problems": list(rep.problems)}


def classification_json(report: ClassificationReport) -> dict:
    return {
        "is_right_doe": verdict_json(report.is_right_doe),
        "is_double_via_det": verdict_json(report.is_double_via_det),
        "is_trimmed": report.is_trimmed,
        "is_graded": report.is_graded,
        "is_connected": report.is_connected,
        "is_spbw": verdict_json(report.is_spbw),
        "is_quasi_commutative": report.is_quasi_commutative,
        "is_bijective": verdict_json(report.is_bijective),
        "is_derivation_type": report.is_derivation_type,
        "is_endomorphism_type": report.is_endomorphism_type,
        "is_constant": report.is_constant,
        "theorem_citations": list(report.theorem_citations),
    }


def det_sigma_json(rep: DetSigmaReport) -> dict:
    images = {name: str(img)
              for name, img in zip(rep.endo.ring.names, rep.endo.images)}
    return {
        "images": images,
        "multiplicative": pair_check_json(rep.multiplicative),
        "invertible": verdict_json(rep.invertible),
    }


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def two_column(rows, gap: int = 2) -> str:
    """Align 'label: value' rows on the colon."""
    width = max((len(label) for label, _ in rows), default=0)
    return "\n".join(f"{label + ':':<{width + 1 + gap}}{value}"
                     for label, value in rows)


@dataclass
class ReportDocument:
    """Machine (JSON-ready dict) and human (aligned text) forms of one report."""
    machine: dict
    human: str
    as_json: bool = False

    def rendered(self) -> str:
        return canonical_json(self.machine) if self.as_json else self.human + "\n"
