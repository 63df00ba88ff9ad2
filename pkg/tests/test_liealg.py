"""Lie algebra structure: brackets, series, nilradical, type sampling."""

import random
from fractions import Fraction

import pytest

from solvkit import catalog
from solvkit.errors import NotSolvable
from solvkit.liealg import (LieAlgebra, is_nilpotent_matrix,
                            realify_complex_brackets)
from solvkit.scalars import Scalar


def heisenberg3():
    return LieAlgebra(3, {(0, 1): {2: 1}})


def test_constructor_validation():
    with pytest.raises(ValueError):
        LieAlgebra(0, {})
    with pytest.raises(ValueError):
        LieAlgebra(3, {(1, 0): {2: 1}})      # needs i < j
    with pytest.raises(ValueError):
        LieAlgebra(3, {(0, 1): {3: 1}})      # output out of range
    with pytest.raises(ValueError):
        LieAlgebra(3, {(0, 1): {2: "1+1*i"}})  # constants must be real
    with pytest.raises(ValueError):
        LieAlgebra(4, {}, basis=["a", "b"])
    with pytest.raises(ValueError):
        LieAlgebra(3, {}, form="complex")    # odd dim
    with pytest.raises(ValueError):
        LieAlgebra(2, {}, form="quaternionic")


def test_bracket_antisymmetry_is_structural():
    l = heisenberg3()
    assert l.bracket_basis(0, 1) == [Scalar(0), Scalar(0), Scalar(1)]
    assert l.bracket_basis(1, 0) == [Scalar(0), Scalar(0), Scalar(-1)]
    assert l.bracket_basis(2, 2) == [Scalar(0)] * 3
    rng = random.Random(31)
    for _ in range(50):
        u = [Fraction(rng.randint(-3, 3)) for _ in range(3)]
        v = [Fraction(rng.randint(-3, 3)) for _ in range(3)]
        uv = l.bracket(u, v)
        vu = l.bracket(v, u)
        assert uv == [-x for x in vu]


def test_adjoint_matches_bracket():
    l = heisenberg3()
    ad0 = l.adjoint([1, 0, 0])
    # ad(e0) sends e1 to e2
    col1 = [ad0[i][1] for i in range(3)]
    assert col1 == [Scalar(0), Scalar(0), Scalar(1)]
    assert is_nilpotent_matrix(ad0)


def test_jacobi_check_pass_and_witness():
    assert heisenberg3().jacobi_check().ok
    # [e0,e1]=e1, [e1,e2]=e0 fails Jacobi on the only triple
    bad = LieAlgebra(3, {(0, 1): {1: 1}, (1, 2): {0: 1}})
    report = bad.jacobi_check()
    assert not report.ok
    assert report.witness == (0, 1, 2)
    assert any(report.defect)


def test_series_and_flags():
    l = heisenberg3()
    assert l.is_nilpotent()
    assert l.is_solvable()
    assert [s.dim for s in l.lower_central_series()] == [3, 1, 0]
    assert [s.dim for s in l.derived_series()] == [3, 1, 0]
    assert l.derived_subalgebra().dim == 1
    assert l.center().dim == 1

    # [e0,e1] = e1 is solvable but not nilpotent
    aff = LieAlgebra(2, {(0, 1): {1: 1}})
    assert not aff.is_nilpotent()
    assert aff.is_solvable()
    series = aff.lower_central_series()
    assert series[-1].dim == 1 and series[-1] == series[-2]


def test_unimodular():
    assert heisenberg3().unimodular_check()
    assert not LieAlgebra(2, {(0, 1): {1: 1}}).unimodular_check()
    for name in catalog.SURFACE_FAMILIES:
        assert catalog.get(name).algebra.unimodular_check(), name


def test_nilradical():
    l = heisenberg3()
    assert l.nilradical_solvable().dim == 3
    # e3 acts with real eigenvalues on the span of e0..e2
    ent = catalog.get("inoue-s0")
    nil = ent.algebra.nilradical_solvable()
    assert nil.dim == 3
    assert ent.algebra.derived_subalgebra() <= nil
    with pytest.raises(NotSolvable):
        # sl2 is not solvable: [e0,e1]=e2, [e0,e2]=-2e0, [e1,e2]=2e1
        LieAlgebra(3, {(0, 1): {2: 1}, (0, 2): {0: -2},
                       (1, 2): {1: 2}}).nilradical_solvable()


def test_nilradical_dimensions_frozen():
    expected = {
        "abelian": 4, "hyperelliptic": 3, "inoue-s0": 3,
        "primary-kodaira": 4, "secondary-kodaira": 3, "inoue-spm": 3,
        "abelian3": 6, "nilpotent3": 6, "nonnilpotent3": 4,
    }
    for name, dim in expected.items():
        assert catalog.get(name).algebra.nilradical_solvable().dim == dim, name


def test_classify_type_table():
    expected = {
        "abelian": "nilpotent",
        "hyperelliptic": "rigid",
        "inoue-s0": "mixed",
        "primary-kodaira": "nilpotent",
        "secondary-kodaira": "rigid",
        "inoue-spm": "completely_solvable",
        "example3": "rigid",
    }
    for name, tag in expected.items():
        assert catalog.get(name).algebra.classify_type() == tag, name


def test_classify_type_deterministic_seed():
    l = catalog.get("inoue-s0").algebra
    assert l.classify_type(seed=1) == l.classify_type(seed=1)
    with pytest.raises(NotSolvable):
        LieAlgebra(3, {(0, 1): {2: 1}, (0, 2): {0: -2},
                       (1, 2): {1: 2}}).classify_type()


def test_complexify():
    l = heisenberg3()
    lc = l.complexify()
    assert lc.dim == 6 and lc.form == "complex"
    assert lc.complex_dim == 3
    assert lc.jacobi_check().ok
    assert lc.sigma is not None
    # [X0, X1] = X2 and [iX0, iX1] = -X2 in the split basis
    assert lc.bracket_basis(0, 1)[2] == Scalar(1)
    assert lc.bracket_basis(3, 4)[2] == Scalar(-1)
    assert lc.bracket_basis(0, 4)[5] == Scalar(1)
    mi = lc.mult_i_matrix()
    sq = [[sum((mi[i][k] * mi[k][j] for k in range(6)), Scalar(0))
           for j in range(6)] for i in range(6)]
    assert sq == [[Scalar(-1 if i == j else 0) for j in range(6)]
                  for i in range(6)]


def test_realify_complex_brackets():
    """The 3-dim complex algebra [X,Y] = -Y, [X,Z] = Z realified."""
    alg = realify_complex_brackets(3, {(0, 1): {1: -1}, (0, 2): {2: 1}})
    assert alg.dim == 6 and alg.form == "complex"
    assert alg.jacobi_check().ok
    assert alg.bracket_basis(0, 1)[1] == Scalar(-1)
    assert alg.bracket_basis(0, 4)[4] == Scalar(-1)   # [X, iY] = -iY
    assert alg.bracket_basis(3, 1)[4] == Scalar(-1)   # [iX, Y] = -iY
    assert alg.bracket_basis(3, 4)[1] == Scalar(1)    # [iX, iY] = Y
    # complex constants: [X, Y] = i Y realifies with a cross term
    alg2 = realify_complex_brackets(2, {(0, 1): {1: Scalar(0, 1)}})
    assert alg2.bracket_basis(0, 1)[3] == Scalar(1)   # [X, Y] = iY
    assert alg2.bracket_basis(0, 3)[1] == Scalar(-1)  # [X, iY] = -Y
    assert alg2.jacobi_check().ok
