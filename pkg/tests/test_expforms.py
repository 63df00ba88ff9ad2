"""Coordinate exterior calculus with exponential coefficients."""

import random
from fractions import Fraction

import pytest

from solvkit import expforms
from solvkit.errors import DegreeTooHigh
from solvkit.expforms import (ExpForm, LatticeTranslation, conjugate_form,
                              ext_d, form_term, maurer_cartan_forms,
                              monomial_coefficient, omega_coordinate,
                              omega_mc, pullback_translation,
                              restrict_identity, unit_coefficient)
from solvkit.scalars import Scalar


def _rand_form(rng, degree):
    keys = []
    pool = list(range(6))
    terms = {}
    for _ in range(rng.randint(1, 3)):
        key = tuple(sorted(rng.sample(pool, degree)))
        coef = monomial_coefficient(rng.randint(-2, 2), rng.randint(-2, 2),
                                    Scalar(rng.randint(-3, 3),
                                           rng.randint(-3, 3)))
        if not coef:
            continue
        cur = terms.setdefault(key, {})
        for mono, val in coef.items():
            cur[mono] = cur.get(mono, Scalar(0)) + val
        keys.append(key)
    return ExpForm(degree, terms)


def test_construction_validation():
    with pytest.raises(DegreeTooHigh):
        ExpForm(7)
    with pytest.raises(ValueError):
        ExpForm(2, {(1, 0): unit_coefficient(1)})
    with pytest.raises(ValueError):
        ExpForm(1, {(9,): unit_coefficient(1)})
    assert ExpForm(2).is_zero()


def test_phase_folding():
    # e^{i pi} folds to the unit -1
    f = ExpForm(1, {(0,): {(0, 0, Fraction(1), Fraction(0)): Scalar(1)}})
    g = form_term((0,), unit_coefficient(-1))
    assert f == g
    # e^{i pi / 2} folds to i
    h = ExpForm(1, {(0,): {(0, 0, Fraction(1, 2), Fraction(0)): Scalar(1)}})
    assert h == form_term((0,), unit_coefficient(Scalar(0, 1)))
    # e^{i pi / 3} stays symbolic
    s = ExpForm(1, {(0,): {(0, 0, Fraction(1, 3), Fraction(0)): Scalar(1)}})
    assert s != form_term((0,), unit_coefficient(1))
    assert not s.is_zero()


def test_wedge_antisymmetry_and_associativity():
    rng = random.Random(61)
    for _ in range(40):
        a = _rand_form(rng, 1)
        b = _rand_form(rng, 1)
        c = _rand_form(rng, 1)
        assert a.wedge(b) == b.wedge(a).negate()
        assert a.wedge(a).is_zero()
        assert a.wedge(b.wedge(c)) == a.wedge(b).wedge(c)
        assert a.wedge(b.add(c)) == a.wedge(b).add(a.wedge(c))


def test_d_squared_zero_random():
    rng = random.Random(67)
    for _ in range(60):
        f = _rand_form(rng, rng.randint(0, 2))
        assert ext_d(ext_d(f)).is_zero()


def test_d_leibniz_degree_one():
    rng = random.Random(71)
    for _ in range(30):
        a = _rand_form(rng, 1)
        b = _rand_form(rng, 1)
        lhs = ext_d(a.wedge(b))
        rhs = ext_d(a).wedge(b).add(a.wedge(ext_d(b)).negate())
        assert lhs == rhs


def test_conjugation_involution():
    rng = random.Random(73)
    for _ in range(30):
        f = _rand_form(rng, rng.randint(1, 2))
        assert conjugate_form(conjugate_form(f)) == f


def test_maurer_cartan_structure_equations():
    """dw1 = 0, dw2 = w1 ^ w2, dw3 = -w1 ^ w3."""
    w1, w2, w3 = maurer_cartan_forms()
    assert ext_d(w1).is_zero()
    assert ext_d(w2) == w1.wedge(w2)
    assert ext_d(w3) == w1.wedge(w3).negate()


def test_omega_presentations_agree():
    assert omega_mc() == omega_coordinate()


def test_omega_closed_and_real():
    w = omega_coordinate()
    assert ext_d(w).is_zero()
    assert ext_d(omega_mc()).is_zero()
    # conjugation fixes omega (it is a real form)
    assert conjugate_form(w) == w


def test_omega_cubed_is_volume():
    w = omega_coordinate()
    cube = w.wedge(w).wedge(w)
    assert list(cube.terms) == [(0, 1, 2, 3, 4, 5)]
    coef = cube.terms[(0, 1, 2, 3, 4, 5)]
    assert coef == {(0, 0, Fraction(0), Fraction(0)): Scalar(0, 6)}


def test_pullback_invariance_grid():
    w = omega_coordinate()
    for k in (-2, -1, 0, 1, 2):
        t = LatticeTranslation(w1_re=Fraction(1), w1_im_pi=Fraction(k),
                               w2_re=Fraction(1, 3), w3_re=Fraction(-2))
        assert pullback_translation(w, t) == w, k


def test_pullback_fails_at_half_integer():
    w = omega_coordinate()
    half = LatticeTranslation(w1_im_pi=Fraction(1, 2))
    assert pullback_translation(w, half) != w


def test_pullback_multiplicative():
    """Pullback along a composition equals composed pullbacks (x-parts add)."""
    rng = random.Random(79)
    for _ in range(25):
        f = _rand_form(rng, rng.randint(1, 2))
        t1 = LatticeTranslation(w1_re=Fraction(rng.randint(-2, 2)),
                                w1_im_pi=Fraction(rng.randint(-2, 2), 2))
        t2 = LatticeTranslation(w1_re=Fraction(rng.randint(-2, 2)),
                                w1_im_pi=Fraction(rng.randint(-2, 2), 2))
        both = t1.compose(t2)
        assert pullback_translation(pullback_translation(f, t1), t2) == \
            pullback_translation(f, both)


def test_pullback_commutes_with_d():
    rng = random.Random(83)
    for _ in range(25):
        f = _rand_form(rng, rng.randint(0, 2))
        t = LatticeTranslation(w1_re=Fraction(rng.randint(-2, 2)),
                               w1_im_pi=Fraction(rng.randint(-1, 1)))
        assert ext_d(pullback_translation(f, t)) == \
            pullback_translation(ext_d(f), t)


def test_restrict_identity_fixture():
    w = omega_coordinate()
    r = restrict_identity(w)
    assert r.degree == 2 and r.dim == 6
    assert {k: str(v) for k, v in r.coeffs.items()} == {
        (0, 3): "2", (1, 2): "2", (4, 5): "2"}


def test_restrict_identity_rejects_phase_tags():
    w = omega_coordinate()
    t = LatticeTranslation(w1_im_pi=Fraction(1, 3))
    moved = pullback_translation(w, t)
    with pytest.raises(ValueError):
        restrict_identity(moved)


def test_restrict_identity_linear():
    w1, w2, _ = maurer_cartan_forms()
    a = restrict_identity(w1.wedge(conjugate_form(w1)))
    b = restrict_identity(w1)
    assert a.degree == 2 and b.degree == 1
    # dx ^ dxbar = -2i xi0 ^ xi3
    assert {k: str(v) for k, v in a.coeffs.items()} == {(0, 3): "-2*i"}
