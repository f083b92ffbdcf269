"""Built-in presentations, each with the classification facts expected of it.

Entry names are stable CLI identifiers.  Parameters are bound to exact
rationals; bindings violating an entry's constraints are refused with the
constraint spelled out.  The `expected` mapping lists exactly the facts
asserted for the algebra, no more; golden tests check `classify` against it.

For entries whose usual coordinates collide with the extension-variable
names, the base generators are renamed (see each entry's notes).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Mapping, Tuple

from .errors import ConstraintError
from .extension import DOEPresentation
from .maps import StructureMaps
from .poly import Ring, as_scalar


@dataclass(frozen=True)
class CatalogueEntry:
    name: str
    summary: str
    defaults: Mapping[str, object]
    builder: Callable[[Dict[str, object]], DOEPresentation]
    expected: Mapping[str, object]
    notes: str = ""
    int_params: Tuple[str, ...] = ()

    def bind(self, **bindings) -> Dict[str, object]:
        params = dict(self.defaults)
        for key, value in bindings.items():
            if key not in params:
                raise ConstraintError(
                    f"{self.name} has no parameter {key!r} "
                    f"(parameters: {', '.join(params)})")
            if key in self.int_params:
                value = as_scalar(value) if not isinstance(value, int) else Fraction(value)
                if value.denominator != 1:
                    raise ConstraintError(f"{self.name} requires integer {key}")
                value = int(value)
            else:
                value = as_scalar(value)
            params[key] = value
        return params


def _require(condition: bool, message: str):
    if not condition:
        raise ConstraintError(message)


# -- builders -----------------------------------------------------------------


def _weyl_a2(params):
    # Polynomial coefficients in two variables; each x_i acts as the partial
    # derivative in t_i, so x_i*t_i = t_i*x_i + 1 and the x's commute.
    ring = Ring(("t1", "t2"))
    one, zero = ring.one(), ring.zero()
    maps = StructureMaps(ring, delta=((one, zero), (zero, one)))
    return DOEPresentation(ring, maps, p12=1, p11=0)


def _quantum_plane(params):
    lam = params["lam"]
    _require(lam != 0, "quantum_plane requires lam != 0")
    ring = Ring(())
    return DOEPresentation(ring, StructureMaps(ring), p12=lam, p11=0)


def _diffusion(params):
    c12, c21 = params["c12"], params["c21"]
    _require(c12 != 0, "diffusion requires c12 != 0")
    _require(c21 != 0, "diffusion requires c21 != 0")
    ring = Ring(("t1", "t2"))
    t1, t2 = ring.gen(0), ring.gen(1)
    inv = Fraction(1) / c21
    # c12*x1*x2 - c21*x2*x1 = t2*x1 - t1*x2, solved for x2*x1.
    return DOEPresentation(ring, StructureMaps(ring), p12=c12 * inv, p11=0,
                           tau1=t2 * (-inv), tau2=t1 * inv)


def _q_dilation(params):
    q, n = params["q"], params["n"]
    _require(q != 0, "q_dilation requires q != 0")
    _require(isinstance(n, int) and n >= 2, "q_dilation requires integer n >= 2")
    ring = Ring(tuple(f"t{k + 1}" for k in range(n)))
    zero = ring.zero()
    sigma = []
    for k in range(n):
        t = ring.gen(k)
        s11 = t * q if k == 0 else t
        s22 = t * q if k == 1 else t
        sigma.append(((s11, zero), (zero, s22)))
    return DOEPresentation(ring, StructureMaps(ring, sigma=tuple(sigma)),
                           p12=1, p11=0)


def _homogenized_env(params):
    alpha, beta = params["alpha"], params["beta"]
    # Two-dimensional bracket [x1, x2] = alpha*x1 + beta*x2, homogenized by a
    # central degree-1 variable z: x2*x1 = x1*x2 - alpha*z*x1 - beta*z*x2.
    ring = Ring(("z",))
    z = ring.gen(0)
    return DOEPresentation(ring, StructureMaps(ring), p12=1, p11=0,
                           tau1=z * (-alpha), tau2=z * (-beta))


def _a1(params):
    p, a, b, c = params["p"], params["a"], params["b"], params["c"]
    _require(p != 0, "a1 requires p != 0")
    _require(b != 0 and b != 1, "a1 requires b not in {0, 1}")
    ring = Ring(("t",))
    t = ring.gen(0)
    zero = ring.zero()
    sigma = (((t * b, zero), (zero, t / b)),)
    delta = ((zero, t * t * c),)
    tail1 = t * (b * c / (1 - b) * (p * b - 1))
    return DOEPresentation(ring, StructureMaps(ring, sigma=sigma, delta=delta),
                           p12=p, p11=0, tau1=tail1, tau0=t * t * a)


def _a3_doe(params):
    a = params["a"]
    _require(a != 0, "a3 requires a != 0")
    ring = Ring(("t",))
    t = ring.gen(0)
    zero = ring.zero()
    # x1*t = a*t*x1 + t*x2 puts t in the upper-right sigma entry.
    sigma = (((t * a, t), (zero, t * a)),)
    return DOEPresentation(ring, StructureMaps(ring, sigma=sigma), p12=1, p11=0)


def _a3_spbw(params):
    a = params["a"]
    _require(a != 0, "a3 requires a != 0")
    # Re-presentation over the former second variable: base generator u is the
    # old x2, the old t becomes x1 and the old x1 becomes x2.  The defining
    # relations turn into x1*u = (1/a)*u*x1, x2*u = u*x2 and
    # x2*x1 = a*x1*x2 + (1/a)*u*x1.
    ring = Ring(("u",))
    u = ring.gen(0)
    zero = ring.zero()
    sigma = (((u / a, zero), (zero, u)),)
    return DOEPresentation(ring, StructureMaps(ring, sigma=sigma),
                           p12=a, p11=0, tau1=u / a)


def _free_doe(params):
    ring = Ring(())
    return DOEPresentation(ring, StructureMaps(ring),
                           p12=params["p12"], p11=params["p11"],
                           tau1=params["a1"], tau2=params["a2"],
                           tau0=params["a3"])


_F = Fraction

_ENTRIES = {}


def _register(entry: CatalogueEntry):
    _ENTRIES[entry.name] = entry


_register(CatalogueEntry(
    name="weyl_a2",
    summary="second Weyl algebra: polynomial coefficients, two partial derivatives",
    defaults={},
    builder=_weyl_a2,
    expected={
        "consistent": True,
        "is_right_doe": "pass",
        "is_spbw": "pass",
        "is_graded": False,
        "is_quasi_commutative": False,
        "is_derivation_type": True,
        "is_bijective": "pass",
        "is_trimmed": False,
    },
    notes="x_i acts as d/dt_i; the straightening relations are inhomogeneous",
))

_register(CatalogueEntry(
    name="quantum_plane",
    summary="two variables with x2*x1 = lam*x1*x2 over the ground field",
    defaults={"lam": _F(2)},
    builder=_quantum_plane,
    expected={
        "consistent": True,
        "is_right_doe": "pass",
        "is_spbw": "pass",
        "is_graded": True,
        "is_connected": True,
        "is_quasi_commutative": True,
        "is_trimmed": True,
        "is_constant": True,
    },
))

_register(CatalogueEntry(
    name="diffusion",
    summary="two hopping operators over central coordinates t1, t2",
    defaults={"c12": _F(1), "c21": _F(1)},
    builder=_diffusion,
    expected={
        "consistent": True,
        "is_right_doe": "pass",
        "is_spbw": "pass",
        "is_graded": True,
        "is_connected": True,
        "is_quasi_commutative": False,
        "is_trimmed": False,
    },
    notes="base generators t1, t2 are the central coordinates; x1, x2 are the "
          "hopping operators; mixing relation solved for x2*x1",
))

_register(CatalogueEntry(
    name="q_dilation",
    summary="partial q-dilation operators on polynomials in n variables",
    defaults={"q": _F(3), "n": 2},
    builder=_q_dilation,
    expected={
        "consistent": True,
        "is_right_doe": "pass",
        "is_spbw": "pass",
        "is_graded": True,
        "is_connected": True,
        "is_quasi_commutative": True,
        "is_trimmed": True,
    },
    notes="x_i scales t_i by q and fixes the other variables; n >= 2 base "
          "generators, two extension variables",
    int_params=("n",),
))

_register(CatalogueEntry(
    name="homogenized_env",
    summary="homogenized enveloping algebra of a two-dimensional Lie algebra",
    defaults={"alpha": _F(1), "beta": _F(0)},
    builder=_homogenized_env,
    expected={
        "consistent": True,
        "is_right_doe": "pass",
        "is_spbw": "pass",
        "is_graded": True,
        "is_connected": True,
        "is_trimmed": False,
        "is_quasi_commutative": False,
    },
    notes="bracket [x1, x2] = alpha*x1 + beta*x2 homogenized by central z; "
          "every two-dimensional bracket has this form",
))

_register(CatalogueEntry(
    name="a1",
    summary="one-parameter family over Q[t] with diagonal scaling and a tuned tail",
    defaults={"p": _F(3), "a": _F(1), "b": _F(2), "c": _F(1)},
    builder=_a1,
    expected={
        "consistent": True,
        "is_right_doe": "pass",
        "is_spbw": "pass",
        "is_graded": True,
        "is_connected": True,
    },
    notes="tau1 = b*c*(p*b-1)/(1-b) * t is forced by the overlap on t",
))

_register(CatalogueEntry(
    name="a3_doe",
    summary="upper-triangular sigma over Q[t]: x1*t = a*t*x1 + t*x2",
    defaults={"a": _F(2)},
    builder=_a3_doe,
    expected={
        "consistent": True,
        "is_right_doe": "pass",
        "is_spbw": ("fail", "sigma12"),
        "is_graded": True,
        "is_connected": True,
    },
))

_register(CatalogueEntry(
    name="a3_spbw",
    summary="the a3 algebra re-presented over its former second variable",
    defaults={"a": _F(2)},
    builder=_a3_spbw,
    expected={
        "consistent": True,
        "is_right_doe": "pass",
        "is_spbw": "pass",
        "is_graded": True,
        "is_connected": True,
    },
    notes="rename table: old x2 -> base generator u, old t -> x1, old x1 -> x2",
))

_register(CatalogueEntry(
    name="free_doe",
    summary="the general two-generator extension of the ground field",
    defaults={"p12": _F(1), "p11": _F(0), "a1": _F(0), "a2": _F(0), "a3": _F(0)},
    builder=_free_doe,
    expected={
        "consistent": True,
        "is_right_doe": "pass",
        "is_spbw": "pass",
        "is_constant": True,
    },
    notes="x2*x1 = p12*x1*x2 + p11*x1^2 + a1*x1 + a2*x2 + a3; always a valid "
          "extension of Q, skew PBW exactly when p12 != 0 and p11 = 0",
))


def names():
    return list(_ENTRIES)


def get_entry(name: str) -> CatalogueEntry:
    entry = _ENTRIES.get(name)
    if entry is None:
        raise KeyError(f"unknown catalogue entry {name!r} "
                       f"(available: {', '.join(_ENTRIES)})")
    return entry


def get_example(name: str, **bindings):
    """Build the named presentation with the given parameter bindings.

    Returns (presentation, expected) where expected holds exactly the
    classification facts asserted for the entry at its default bindings.
    """
    entry = get_entry(name)
    params = entry.bind(**bindings)
    return entry.builder(params), dict(entry.expected)
