"""Invariant 2-forms: J-compatibility, the associated symmetric form,
exact signature, and the Kahler / pseudo-Kahler classification.

Signature is never computed numerically: the Gram matrix is symmetric
with rational entries, so its characteristic polynomial has only real
roots and Descartes' rule counts the positive and negative ones exactly.

sweep_invariant_forms handles the nonexistence question "does ANY closed
J-compatible invariant 2-form have full rank": it solves the linear
constraints exactly, looks for a common kernel vector (if one exists all
members are degenerate at once), and otherwise certifies that the
Pfaffian vanishes identically by evaluating it on an integer grid large
enough for its per-variable degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .cohomology import Cochain, ce_d
from .cxstruct import AlmostComplexStructure, is_integrable
from .errors import BoundTooLarge, NotCompatible, NotIntegrable
from .liealg import LieAlgebra
from .polys import descartes_positive_count
from .scalars import Scalar, sc


class TwoForm(Cochain):
    """Degree-2 cochain with real coefficients."""

    def __init__(self, dim: int, coeffs: Optional[Dict] = None):
        super().__init__(dim, 2, coeffs)
        for val in self.coeffs.values():
            if val.im != 0:
                raise ValueError("TwoForm coefficients must be real")

    def matrix(self) -> List[List[Scalar]]:
        n = self.dim
        return [[self.coefficient(i, j) for j in range(n)] for i in range(n)]


def j_compatible(omega: Cochain, j: AlmostComplexStructure) -> bool:
    """omega(JX, JY) = omega(X, Y), checked exactly on all basis pairs."""
    if omega.degree != 2:
        raise ValueError("a 2-form is required")
    if omega.dim != j.dim:
        raise ValueError("dimension mismatch")
    n = omega.dim
    for a in range(n):
        ja = j.apply([Scalar(1 if k == a else 0) for k in range(n)])
        for b in range(a + 1, n):
            jb = j.apply([Scalar(1 if k == b else 0) for k in range(n)])
            if omega.evaluate(ja, jb) != omega.coefficient(a, b):
                return False
    return True


def metric_from(omega: Cochain, j: AlmostComplexStructure) -> List[List[Scalar]]:
    """Gram matrix g(X_i, X_j) = omega(X_i, J X_j); requires compatibility."""
    if not j_compatible(omega, j):
        raise NotCompatible("form is not invariant under J")
    n = omega.dim
    gram = []
    for i in range(n):
        row = []
        for k in range(n):
            jek = j.apply([Scalar(1 if t == k else 0) for t in range(n)])
            val = Scalar(0)
            for m, c in enumerate(jek):
                if c:
                    val = val + c * omega.coefficient(i, m)
            row.append(val)
        gram.append(row)
    for i in range(n):
        for k in range(i + 1, n):
            assert gram[i][k] == gram[k][i], "compatible form gave asymmetric metric"
    return gram


def signature(gram: Sequence[Sequence[object]]) -> Tuple[int, int]:
    """(positives, negatives) of a symmetric exact matrix, exactly.

    The characteristic polynomial of a real symmetric matrix has only
    real roots, so Descartes' sign-variation count is not just a bound
    but the exact number of positive (resp. negative) eigenvalues.
    """
    m = [[sc(x) for x in row] for row in gram]
    n = len(m)
    for i in range(n):
        for k in range(n):
            if m[i][k] != m[k][i]:
                raise ValueError("matrix is not symmetric")
            if m[i][k].im != 0:
                raise ValueError("matrix is not real")
    chi = linalg.char_poly(m)
    pos = descartes_positive_count(chi)
    neg = descartes_positive_count(chi.compose_negate())
    return pos, neg


@dataclass(frozen=True)
class ClassifyResult:
    tag: str  # kahler | pseudo_kahler | degenerate | incompatible | not_closed
    signature: Optional[Tuple[int, int]] = None

    def __str__(self):
        if self.signature is not None:
            return "%s%r" % (self.tag, self.signature)
        return self.tag


def classify(l: LieAlgebra, j: AlmostComplexStructure,
             omega: Cochain) -> ClassifyResult:
    """Closedness, then compatibility, then rank, then exact signature."""
    rep = is_integrable(l, j)
    if not rep.ok:
        raise NotIntegrable("almost complex structure is not integrable: "
                            "witness pair %r" % (rep.witness,))
    if not ce_d(l, omega).is_zero():
        return ClassifyResult("not_closed")
    if not j_compatible(omega, j):
        return ClassifyResult("incompatible")
    gram = metric_from(omega, j)
    if linalg.det(gram) == Scalar(0):
        return ClassifyResult("degenerate")
    p, q = signature(gram)
    if p + q != l.dim:
        raise AssertionError("nonzero determinant but deficient signature")
    return ClassifyResult("kahler" if q == 0 else "pseudo_kahler", (p, q))


# -- nonexistence sweep over all invariant forms ------------------------------


@dataclass(frozen=True)
class SweepResult:
    space_dim: int
    all_degenerate: bool
    method: str                       # "empty" | "common_kernel" | "pfaffian_grid"
    kernel_dim: int = 0
    witness: Optional[Tuple[int, ...]] = None   # grid point with Pf != 0
    grid: Optional[Tuple[int, ...]] = None      # the per-variable grid values


def closed_compatible_space(l: LieAlgebra,
                            j: AlmostComplexStructure) -> List[TwoForm]:
    """Basis of {omega : d omega = 0, omega(J.,J.) = omega}, exact."""
    n = l.dim
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    index = {p: t for t, p in enumerate(pairs)}
    rows: List[List[Scalar]] = []

    def pair_coeff(vec_row, a, b, factor):
        # contribute factor * omega(e_a, e_b) to a linear condition
        if a == b:
            return
        if a < b:
            vec_row[index[(a, b)]] = vec_row[index[(a, b)]] + factor
        else:
            vec_row[index[(b, a)]] = vec_row[index[(b, a)]] - factor

    # closedness rows, one per basis triple
    for i in range(n):
        for jj in range(i + 1, n):
            for k in range(jj + 1, n):
                row = [Scalar(0)] * len(pairs)
                for m, c in enumerate(l.bracket_basis(i, jj)):
                    if c:
                        pair_coeff(row, m, k, -c)
                for m, c in enumerate(l.bracket_basis(i, k)):
                    if c:
                        pair_coeff(row, m, jj, c)
                for m, c in enumerate(l.bracket_basis(jj, k)):
                    if c:
                        pair_coeff(row, m, i, -c)
                if any(row):
                    rows.append(row)
    # compatibility rows, one per pair
    jm = j.matrix
    for (a, b) in pairs:
        row = [Scalar(0)] * len(pairs)
        for ma in range(n):
            if not jm[ma][a]:
                continue
            for mb in range(n):
                if not jm[mb][b]:
                    continue
                pair_coeff(row, ma, mb, jm[ma][a] * jm[mb][b])
        pair_coeff(row, a, b, Scalar(-1))
        if any(row):
            rows.append(row)
    kernel = linalg.nullspace(rows) if rows else [
        [Scalar(1 if t == s else 0) for s in range(len(pairs))]
        for t in range(len(pairs))]
    forms = []
    for vec in kernel:
        coeffs = {pairs[t]: vec[t] for t in range(len(pairs)) if vec[t]}
        forms.append(TwoForm(n, coeffs))
    return forms


def _pfaffian(m: List[List[Scalar]]) -> Scalar:
    n = len(m)
    if n % 2:
        return Scalar(0)
    if n == 0:
        return Scalar(1)
    total = Scalar(0)
    sign = 1
    for jcol in range(1, n):
        a = m[0][jcol]
        if a:
            keep = [t for t in range(1, n) if t != jcol]
            sub = [[m[r][c] for c in keep] for r in keep]
            term = a * _pfaffian(sub)
            total = total + (term if sign == 1 else -term)
        sign = -sign
    return total


def sweep_invariant_forms(l: LieAlgebra, j: AlmostComplexStructure,
                          max_points: int = 200000) -> SweepResult:
    """Decide whether every closed J-compatible invariant 2-form is degenerate."""
    basis = closed_compatible_space(l, j)
    r = len(basis)
    if r == 0:
        return SweepResult(0, True, "empty")
    n = l.dim
    mats = [f.matrix() for f in basis]
    # a vector killed by every basis form is killed by every combination
    stacked = []
    for m in mats:
        stacked.extend(m)
    common = linalg.nullspace(stacked)
    if common:
        return SweepResult(r, True, "common_kernel", kernel_dim=len(common))
    # Pf(sum c_i B_i) has degree <= n/2 in each c_i; vanishing on the grid
    # {0..n/2}^r forces the zero polynomial
    grid_vals = tuple(range(n // 2 + 1))
    if len(grid_vals) ** r > max_points:
        raise BoundTooLarge("grid of %d^%d points refused"
                            % (len(grid_vals), r))
    point = [0] * r
    while True:
        acc = [[Scalar(0)] * n for _ in range(n)]
        for t in range(r):
            if point[t]:
                c = Scalar(point[t])
                for a in range(n):
                    for b in range(n):
                        if mats[t][a][b]:
                            acc[a][b] = acc[a][b] + c * mats[t][a][b]
        if _pfaffian(acc) != Scalar(0):
            return SweepResult(r, False, "pfaffian_grid",
                               witness=tuple(point), grid=grid_vals)
        pos = r - 1
        while pos >= 0 and point[pos] == grid_vals[-1]:
            point[pos] = 0
            pos -= 1
        if pos < 0:
            return SweepResult(r, True, "pfaffian_grid", grid=grid_vals)
        point[pos] += 1
