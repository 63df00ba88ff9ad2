"""Chevalley-Eilenberg cochains, the h1 formula, and the holonomy part."""

import random
from fractions import Fraction

import pytest

from solvkit import catalog, cohomology
from solvkit.cohomology import (Cochain, HolonomyAction, ce_d,
                                closed_holomorphic_1forms, h1_lie,
                                h1_lie_by_kernel, one_form,
                                pseudo_kahler_obstruction, quotient_dim,
                                real_part_subspace, two_form_terms,
                                winkelmann_h1)
from solvkit.errors import (DegreeTooHigh, NonCommutingHolonomy,
                            NonSemisimpleGenerator, NotNilpotent, NotSolvable)
from solvkit.liealg import LieAlgebra
from solvkit.scalars import Scalar


def test_cochain_validation_and_signs():
    c = Cochain(4, 2, {(0, 1): 2, (2, 3): -1})
    assert c.coefficient(0, 1) == Scalar(2)
    assert c.coefficient(1, 0) == Scalar(-2)
    assert c.coefficient(0, 0) == Scalar(0)
    assert c.coefficient(0, 2) == Scalar(0)
    with pytest.raises(ValueError):
        Cochain(4, 2, {(1, 0): 1})         # must be increasing
    with pytest.raises(ValueError):
        Cochain(4, 2, {(0, 5): 1})         # out of range
    with pytest.raises(ValueError):
        Cochain(4, 2, {(0,): 1})           # wrong arity
    with pytest.raises(DegreeTooHigh):
        Cochain(4, 4)


def test_cochain_evaluate_alternating():
    c = Cochain(3, 2, {(0, 1): 1})
    rng = random.Random(43)
    for _ in range(30):
        u = [Fraction(rng.randint(-3, 3)) for _ in range(3)]
        v = [Fraction(rng.randint(-3, 3)) for _ in range(3)]
        assert c.evaluate(u, v) == -c.evaluate(v, u)
        assert c.evaluate(u, u) == Scalar(0)
    assert c.evaluate([1, 0, 0], [0, 1, 0]) == Scalar(1)


def test_cochain_add_scale():
    a = two_form_terms(3, {(0, 1): 1})
    b = two_form_terms(3, {(0, 1): -1, (1, 2): 2})
    s = a.add(b)
    assert s.coefficient(0, 1) == Scalar(0)
    assert s.coefficient(1, 2) == Scalar(2)
    assert a.scale(0).is_zero()


def test_d_squared_zero_exhaustive():
    """d^2 = 0 on every 1-form basis element of every catalog algebra."""
    for name in catalog.list_names():
        l = catalog.get(name).algebra
        for i in range(l.dim):
            dd = ce_d(l, ce_d(l, one_form(l.dim, i)))
            assert dd.is_zero(), (name, i)


def test_d_on_two_forms_random():
    rng = random.Random(47)
    for name in ("hyperelliptic", "inoue-s0", "nilpotent3"):
        l = catalog.get(name).algebra
        n = l.dim
        for _ in range(10):
            coeffs = {}
            for a in range(n):
                for b in range(a + 1, n):
                    v = rng.randint(-2, 2)
                    if v:
                        coeffs[(a, b)] = v
            w = Cochain(n, 2, coeffs)
            dw = ce_d(l, w)
            assert dw.degree == 3
            # dw is alternating by construction; spot check a value
            if dw.coeffs:
                key = sorted(dw.coeffs)[0]
                i, j, k = key
                ei = [Scalar(1 if t == i else 0) for t in range(n)]
                ej = [Scalar(1 if t == j else 0) for t in range(n)]
                ek = [Scalar(1 if t == k else 0) for t in range(n)]
                lhs = dw.coefficient(i, j, k)
                rhs = (-w.evaluate(l.bracket(ei, ej), ek)
                       + w.evaluate(l.bracket(ei, ek), ej)
                       - w.evaluate(l.bracket(ej, ek), ei))
                assert lhs == rhs


def test_h1_lie_frozen_table():
    expected = {
        "abelian": 4, "hyperelliptic": 2, "inoue-s0": 1,
        "primary-kodaira": 3, "secondary-kodaira": 1, "inoue-spm": 1,
        "example3": 2, "abelian3": 3, "nilpotent3": 2, "nonnilpotent3": 1,
    }
    for name, value in expected.items():
        l = catalog.get(name).algebra
        assert h1_lie(l) == value, name
        assert h1_lie_by_kernel(l) == value, name


def test_holonomy_action_validation():
    HolonomyAction([])
    HolonomyAction([[[1, 0], [0, 1]]])
    with pytest.raises(NonSemisimpleGenerator):
        HolonomyAction([[[1, 1], [0, 1]]])
    with pytest.raises(NonCommutingHolonomy):
        HolonomyAction([[[0, 1], [1, 0]], [[1, 0], [0, -1]]])
    with pytest.raises(ValueError):
        HolonomyAction([[[0, 0], [0, 0]]])   # singular
    with pytest.raises(TypeError):
        HolonomyAction([[[1.0, 0.0], [0.0, 1.0]]])


def test_real_part_subspace():
    # rotation by 90 degrees: no real eigenvalues at all
    rot = [[Fraction(0), Fraction(-1)], [Fraction(1), Fraction(0)]]
    assert real_part_subspace(rot).dim == 0
    # hyperbolic matrix: all eigenvalues real
    hyp = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert real_part_subspace(hyp).dim == 2
    # block diagonal mix keeps only the hyperbolic block
    mix = [[Fraction(2), Fraction(1), 0, 0],
           [Fraction(1), Fraction(1), 0, 0],
           [0, 0, Fraction(0), Fraction(-1)],
           [0, 0, Fraction(1), Fraction(0)]]
    sub = real_part_subspace([[Fraction(x) for x in row] for row in mix])
    assert sub.dim == 2
    assert sub.contains([Scalar(1), Scalar(0), Scalar(0), Scalar(0)])


def test_quotient_dim():
    assert quotient_dim(catalog.get("nonnilpotent3").algebra) == 4
    assert quotient_dim(catalog.get("nilpotent3").algebra) == 0
    assert quotient_dim(catalog.get("abelian3").algebra) == 0


def test_winkelmann_table_frozen():
    """The four 3-dim fixtures: h1 = 3, 2, 3, 1 split as lie + holonomy."""
    from solvkit import lattices

    nakamura = lattices.nakamura_lattice([[2, 1], [1, 1]], Fraction(1), 1)
    example6 = lattices.build_lattice_nonnilpotent(
        [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [-1, 1, -3, 1]], k=1)
    cases = [
        ("abelian3", [], (3, 3, 0)),
        ("nilpotent3", [], (2, 2, 0)),
        ("nonnilpotent3", nakamura.holonomy_generators(), (3, 1, 2)),
        ("nonnilpotent3", example6.holonomy_generators(), (1, 1, 0)),
    ]
    for name, gens, want in cases:
        l = catalog.get(name).algebra
        got = winkelmann_h1(l, HolonomyAction(gens))
        assert (got["h1"], got["h1_lie"], got["dimW"]) == want, (name, got)


def test_winkelmann_guards():
    l = catalog.get("nonnilpotent3").algebra
    with pytest.raises(ValueError):
        # generator size must match the 4-dim quotient
        winkelmann_h1(l, HolonomyAction([[[1, 0], [0, 1]]]))
    sl2 = LieAlgebra(3, {(0, 1): {2: 1}, (0, 2): {0: -2}, (1, 2): {1: 2}})
    with pytest.raises(NotSolvable):
        winkelmann_h1(sl2, HolonomyAction([]))


def test_closed_holomorphic_1forms():
    assert closed_holomorphic_1forms(catalog.get("nilpotent3").algebra) == 2
    assert closed_holomorphic_1forms(catalog.get("abelian3").algebra) == 3
    with pytest.raises(NotNilpotent):
        closed_holomorphic_1forms(catalog.get("nonnilpotent3").algebra)
    with pytest.raises(ValueError):
        closed_holomorphic_1forms(catalog.get("abelian").algebra)


def test_pseudo_kahler_obstruction():
    assert pseudo_kahler_obstruction(3, 2) == "obstructed"
    assert pseudo_kahler_obstruction(3, 3) == "passes"
    assert pseudo_kahler_obstruction(3, 5) == "passes"
    with pytest.raises(ValueError):
        pseudo_kahler_obstruction(0, 1)
