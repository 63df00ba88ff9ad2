"""Two-form classification, exact signatures, and the degeneracy sweep."""

import random
from fractions import Fraction

import pytest

from solvkit import catalog, linalg, pkforms
from solvkit.errors import NotCompatible, NotIntegrable
from solvkit.pkforms import (TwoForm, classify, closed_compatible_space,
                             j_compatible, metric_from, signature,
                             sweep_invariant_forms)
from solvkit.scalars import Scalar


def test_two_form_rejects_complex_coeffs():
    with pytest.raises(ValueError):
        TwoForm(4, {(0, 1): "1+1*i"})
    f = TwoForm(4, {(0, 1): 1, (2, 3): -2})
    m = f.matrix()
    assert m[0][1] == Scalar(1) and m[1][0] == Scalar(-1)
    assert m[3][2] == Scalar(2)


def test_j_compatible():
    entry = catalog.get("abelian")
    omega = TwoForm(4, {(0, 1): 1, (2, 3): 1})
    assert j_compatible(omega, entry.j)
    assert not j_compatible(TwoForm(4, {(0, 2): 1}), entry.j)
    with pytest.raises(ValueError):
        j_compatible(TwoForm(2, {(0, 1): 1}), entry.j)


def test_metric_from():
    entry = catalog.get("abelian")
    omega = TwoForm(4, {(0, 1): 1, (2, 3): 1})
    gram = metric_from(omega, entry.j)
    assert gram == linalg.identity(4) or \
        gram == [[Scalar(1 if i == j else 0) for j in range(4)]
                 for i in range(4)]
    with pytest.raises(NotCompatible):
        metric_from(TwoForm(4, {(0, 2): 1}), entry.j)


def test_signature_basics():
    assert signature([[1, 0], [0, -1]]) == (1, 1)
    assert signature([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == (3, 0)
    assert signature([[0, 0], [0, 0]]) == (0, 0)
    assert signature([[Fraction(1, 2)]]) == (1, 0)
    with pytest.raises(ValueError):
        signature([[0, 1], [2, 0]])


def test_signature_congruence_invariant():
    """Sylvester: P^T G P has the same signature for invertible rational P."""
    rng = random.Random(53)
    g = [[Fraction(2), Fraction(1), 0, 0],
         [Fraction(1), Fraction(-1), 0, 0],
         [0, 0, Fraction(3), 0],
         [0, 0, 0, Fraction(-5)]]
    g = [[Fraction(x) for x in row] for row in g]
    base = signature(g)
    trials = 0
    while trials < 25:
        p = [[Fraction(rng.randint(-3, 3)) for _ in range(4)]
             for _ in range(4)]
        if linalg.det(p) == 0:
            continue
        gp = linalg.mat_mul(linalg.mat_mul(linalg.transpose(p), g), p)
        assert signature(gp) == base
        trials += 1


def test_classify_kahler():
    entry = catalog.get("abelian")
    omega = TwoForm(4, {(0, 1): 1, (2, 3): 1})
    verdict = classify(entry.algebra, entry.j, omega)
    assert verdict.tag == "kahler"
    assert verdict.signature == (4, 0)
    assert str(verdict) == "kahler(4, 0)"


def test_classify_branches():
    entry = catalog.get("abelian")
    # J-incompatible but closed
    assert classify(entry.algebra, entry.j,
                    TwoForm(4, {(0, 2): 1})).tag == "incompatible"
    # compatible but rank-deficient
    assert classify(entry.algebra, entry.j,
                    TwoForm(4, {(0, 1): 1})).tag == "degenerate"
    # non-closed on a non-abelian algebra
    hyp = catalog.get("hyperelliptic")
    assert classify(hyp.algebra, hyp.j,
                    TwoForm(4, {(1, 2): 1})).tag == "not_closed"
    # non-integrable J raises before any omega logic runs
    from solvkit.cxstruct import j_from_images
    bad_j = j_from_images(4, {0: {2: 1}, 2: {0: -1}, 1: {3: 1}, 3: {1: -1}})
    with pytest.raises(NotIntegrable):
        classify(hyp.algebra, bad_j, TwoForm(4, {(0, 1): 1}))


def test_classify_pseudo_kahler_fixture_values():
    """The identity restriction of the coordinate form: compatible with an
    indefinite metric but not CE-closed on the realified algebra."""
    from solvkit.cohomology import ce_d

    entry = catalog.get("nonnilpotent3")
    fix = TwoForm(6, {(0, 3): 2, (1, 2): 2, (4, 5): 2})
    assert j_compatible(fix, entry.j)
    gram = metric_from(fix, entry.j)
    assert signature(gram) == (4, 2)
    d = ce_d(entry.algebra, fix)
    assert {k: str(v) for k, v in d.coeffs.items()} == {
        (1, 3, 5): "-4", (2, 3, 4): "-4"}
    assert classify(entry.algebra, entry.j, fix).tag == "not_closed"


def test_closed_compatible_space_dims():
    expected = {
        "nilpotent3": 4,
        "nonnilpotent3": 1,
        "inoue-s0": 1,
        "secondary-kodaira": 1,
        "inoue-spm": 1,
    }
    for name, dim in expected.items():
        entry = catalog.get(name)
        basis = closed_compatible_space(entry.algebra, entry.j)
        assert len(basis) == dim, name
        for f in basis:
            from solvkit.cohomology import ce_d
            assert ce_d(entry.algebra, f).is_zero()
            assert j_compatible(f, entry.j)


def test_sweep_frozen():
    expected = {
        "nilpotent3": (4, True, "common_kernel", 2),
        "nonnilpotent3": (1, True, "common_kernel", 4),
        "inoue-s0": (1, True, "common_kernel", 2),
        "secondary-kodaira": (1, True, "common_kernel", 2),
        "inoue-spm": (1, True, "common_kernel", 2),
    }
    for name, want in expected.items():
        entry = catalog.get(name)
        res = sweep_invariant_forms(entry.algebra, entry.j)
        got = (res.space_dim, res.all_degenerate, res.method, res.kernel_dim)
        assert got == want, (name, got)


def test_sweep_finds_nondegenerate_form():
    entry = catalog.get("abelian")
    res = sweep_invariant_forms(entry.algebra, entry.j)
    assert not res.all_degenerate
    assert res.method == "pfaffian_grid"
    assert res.witness is not None


def test_pfaffian_squares_to_det():
    rng = random.Random(59)
    for _ in range(20):
        n = 4
        m = [[Scalar(0)] * n for _ in range(n)]
        for a in range(n):
            for b in range(a + 1, n):
                v = Scalar(rng.randint(-3, 3))
                m[a][b] = v
                m[b][a] = -v
        pf = pkforms._pfaffian(m)
        assert pf * pf == linalg.det(m)
