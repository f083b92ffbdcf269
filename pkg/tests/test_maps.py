"""Structure maps: evaluation, consistency checks and det sigma."""

import random
from fractions import Fraction

import pytest

from dorex import (InconsistentMapsError, Ring, StructureMaps, apply_delta,
                   apply_sigma, check_delta_derivation, check_sigma_hom,
                   get_example)
from dorex.maps import det_sigma_endo_maps, det_sigma_maps, mat_scale_identity

from conftest import random_poly


def weyl_maps():
    ring = Ring(("t1", "t2"))
    one, zero = ring.one(), ring.zero()
    return StructureMaps(ring, delta=((one, zero), (zero, one)))


def a1_maps(b=Fraction(2), c=Fraction(1)):
    ring = Ring(("t",))
    t = ring.gen(0)
    zero = ring.zero()
    return StructureMaps(ring, sigma=(((t * b, zero), (zero, t / b)),),
                         delta=((zero, t * t * c),))


def a3_maps(a=Fraction(2)):
    ring = Ring(("t",))
    t = ring.gen(0)
    return StructureMaps(ring, sigma=(((t * a, t), (t * 0, t * a)),))


def test_apply_sigma_identity_structure():
    maps = weyl_maps()
    ring = maps.ring
    r = ring.gen(0) * ring.gen(1)
    assert apply_sigma(maps, r) == mat_scale_identity(r)


def test_apply_sigma_diagonal_square():
    # sigma(t) = diag(2t, t/2), so sigma(t^2) = diag(4t^2, t^2/4).
    maps = a1_maps()
    t = maps.ring.gen(0)
    s = apply_sigma(maps, t * t)
    assert s[0][0] == t * t * 4
    assert s[1][1] == t * t / 4
    assert s[0][1].is_zero and s[1][0].is_zero


def test_apply_sigma_unital():
    for maps in (weyl_maps(), a1_maps(), a3_maps()):
        s = apply_sigma(maps, maps.ring.one())
        assert s == mat_scale_identity(maps.ring.one())


def test_apply_delta_weyl_product():
    # delta(t1*t2) = sigma(t1)delta(t2) + delta(t1)*t2 = (t2, t1).
    maps = weyl_maps()
    t1, t2 = maps.ring.gen(0), maps.ring.gen(1)
    assert apply_delta(maps, t1 * t2) == (t2, t1)


def test_apply_delta_kills_constants():
    for maps in (weyl_maps(), a1_maps()):
        col = apply_delta(maps, maps.ring.const(Fraction(7, 3)))
        assert col[0].is_zero and col[1].is_zero


def test_apply_delta_one_leibniz_step():
    # b=2, c=1: delta(t^2) = sigma(t)delta(t) + delta(t)*t = (0, 3/2 t^3).
    maps = a1_maps()
    t = maps.ring.gen(0)
    col = apply_delta(maps, t * t)
    assert col[0].is_zero
    assert col[1] == t ** 3 * Fraction(3, 2)


def test_sigma_hom_pass_diagonal():
    assert check_sigma_hom(a1_maps()).ok


def test_sigma_hom_fail_pair():
    # sigma(t1) = [[t1, t1], [0, t1]], sigma(t2) = [[t2, 0], [t2, t2]]:
    # the products in the two orders differ, so the extension to products
    # of generators is ill defined.
    ring = Ring(("t1", "t2"))
    t1, t2 = ring.gen(0), ring.gen(1)
    zero = ring.zero()
    maps = StructureMaps(ring, sigma=(
        ((t1, t1), (zero, t1)),
        ((t2, zero), (t2, t2)),
    ))
    report = check_sigma_hom(maps)
    assert not report.ok
    assert len(report.failures) == 1
    failure = report.failures[0]
    assert (failure.gen_i, failure.gen_j) == ("t1", "t2")
    assert failure.diff[0][0] == t1 * t2
    with pytest.raises(InconsistentMapsError):
        apply_sigma(maps, t1 * t2)


def test_sigma_hom_vacuous_for_ground_field():
    maps = StructureMaps(Ring(()))
    assert check_sigma_hom(maps).ok
    assert check_delta_derivation(maps).ok


def test_delta_derivation_weyl_and_zero():
    assert check_delta_derivation(weyl_maps()).ok
    ring = Ring(("t1", "t2"))
    assert check_delta_derivation(StructureMaps(ring)).ok  # delta = 0


def test_delta_derivation_symmetric_example():
    # sigma = identity, delta(t1) = (t2^2, 0), delta(t2) = 0: both orders
    # give (t2^3, 0) on the pair, so the check passes.
    ring = Ring(("t1", "t2"))
    t2 = ring.gen(1)
    zero = ring.zero()
    maps = StructureMaps(ring, delta=((t2 * t2, zero), (zero, zero)))
    assert check_delta_derivation(maps).ok


def test_delta_derivation_failure_detected():
    # Non-scalar diagonal sigma with a delta that cannot extend.
    ring = Ring(("t1", "t2"))
    t1, t2 = ring.gen(0), ring.gen(1)
    zero = ring.zero()
    maps = StructureMaps(ring,
                         sigma=(((t1 * 2, zero), (zero, t1)),
                                ((t2, zero), (zero, t2))),
                         delta=((ring.one(), zero), (zero, zero)))
    report = check_delta_derivation(maps)
    assert not report.ok
    with pytest.raises(InconsistentMapsError):
        apply_delta(maps, t1 * t2)


def test_sigma_multiplicative_randomized():
    from dorex.maps import mat_mul
    rng = random.Random(77)
    for maps in (a1_maps(), a3_maps(), weyl_maps()):
        for _ in range(60):
            r = random_poly(rng, maps.ring, max_degree=3)
            s = random_poly(rng, maps.ring, max_degree=3)
            assert apply_sigma(maps, r * s) == mat_mul(apply_sigma(maps, r),
                                                       apply_sigma(maps, s))


def test_delta_twisted_leibniz_randomized():
    from dorex.maps import col_add, col_scale, mat_apply
    rng = random.Random(78)
    for maps in (a1_maps(), weyl_maps()):
        for _ in range(60):
            r = random_poly(rng, maps.ring, max_degree=3)
            s = random_poly(rng, maps.ring, max_degree=3)
            lhs = apply_delta(maps, r * s)
            rhs = col_add(mat_apply(apply_sigma(maps, r), apply_delta(maps, s)),
                          col_scale(apply_delta(maps, r), s))
            assert lhs == rhs


def test_graded_maps_shift_degrees():
    # Homogeneous sigma entries of degree deg(t) keep degrees; delta entries
    # of degree deg(t)+1 raise them by one.
    rng = random.Random(79)
    maps = a1_maps()
    t = maps.ring.gen(0)
    for n in range(1, 5):
        r = t ** n
        s = apply_sigma(maps, r)
        for row in s:
            for entry in row:
                assert entry.is_homogeneous(n)
        col = apply_delta(maps, r)
        for entry in col:
            assert entry.is_homogeneous(n + 1)
    del rng


# -- det sigma ------------------------------------------------------------------


def test_det_sigma_a1_is_identity():
    # det(t) = s22(s11(t)) - p*s12(s21(t)) = s22(2t) - 0 = 2 * t/2 = t.
    pres, _ = get_example("a1")
    t = pres.ring.gen(0)
    assert pres.det_sigma(t) == t
    rep = pres.det_sigma_endo()
    assert rep.endo.is_identity()
    assert rep.multiplicative.ok
    assert rep.invertible.is_pass


def test_det_sigma_weyl_identity():
    pres, _ = get_example("weyl_a2")
    rep = pres.det_sigma_endo()
    assert rep.endo.is_identity()
    assert rep.multiplicative.ok


def test_det_sigma_a3_scaling():
    # P = (1, 0): det(t) = s22(s11(t)) - s12(s21(t)) = s22(a*t) - s12(0)
    #           = a * (a*t) = a^2 t = 4t at a = 2.
    pres, _ = get_example("a3_doe", a=2)
    t = pres.ring.gen(0)
    assert pres.det_sigma(t) == t * 4
    rep = pres.det_sigma_endo()
    assert rep.multiplicative.ok
    assert rep.invertible.is_pass


def test_det_sigma_multiplicative_randomized_over_catalogue():
    from dorex import names
    rng = random.Random(80)
    for name in names():
        pres, _ = get_example(name)
        for _ in range(25):
            r = random_poly(rng, pres.ring, max_degree=2)
            s = random_poly(rng, pres.ring, max_degree=2)
            lhs = pres.det_sigma(r * s)
            rhs = pres.det_sigma(r) * pres.det_sigma(s)
            assert lhs == rhs


def test_det_sigma_general_parameter_formula():
    # p11 != 0 exercises the -p11*s12(s11(r)) term: with sigma12(t) = t and
    # sigma11(t) = t the images pick up a -p11 contribution.
    ring = Ring(("t",))
    t = ring.gen(0)
    zero = ring.zero()
    maps = StructureMaps(ring, sigma=(((t, t), (zero, t)),))
    out = det_sigma_maps(maps, Fraction(1), Fraction(1), t)
    # s11(t) = t, s12(s11(t)) = t, s22(s11(t)) = t, s21(t) = 0:
    # det(t) = -1*t + t - 0 = 0.
    assert out.is_zero
    rep = det_sigma_endo_maps(maps, Fraction(1), Fraction(1))
    assert rep.invertible.is_fail
