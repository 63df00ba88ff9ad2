"""Finite-dimensional Lie algebras with exact rational structure constants.

A LieAlgebra stores the brackets [e_i, e_j] for i < j only; antisymmetry
is structural, never data. The form flag records how the coordinate space
is to be read:

  form = "real":    a real Lie algebra, dim = real dimension.
  form = "complex": the real description of a complex Lie algebra whose
                    complex dimension is dim // 2. The basis convention is
                    (Z_1..Z_m, i Z_1..i Z_m), so multiplication by i is the
                    standard block map (u, v) -> (-v, u), and an optional
                    conjugation sigma is stored as an exact matrix.

Structure constants are real in both cases (a complex algebra realified in
the split basis has real constants).
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .errors import InternalCheckFailed, NotSolvable
from .linalg import Subspace
from .polys import all_roots_pure_imaginary, all_roots_real
from .scalars import Scalar, sc

DEFAULT_SEED = 20240911


def env_seed() -> int:
    return int(os.environ.get("SOLVKIT_SEED", DEFAULT_SEED))


BracketTable = Dict[Tuple[int, int], Dict[int, Scalar]]


@dataclass(frozen=True)
class JacobiReport:
    ok: bool
    witness: Optional[Tuple[int, int, int]] = None
    defect: Optional[List[Scalar]] = None


class LieAlgebra:
    def __init__(self, dim: int, brackets: Dict[Tuple[int, int], Dict[int, object]],
                 basis: Optional[Sequence[str]] = None, form: str = "real",
                 sigma: Optional[List[List[object]]] = None):
        if dim < 1:
            raise ValueError("dimension must be positive")
        if form not in ("real", "complex"):
            raise ValueError("form must be 'real' or 'complex'")
        if form == "complex" and dim % 2:
            raise ValueError("complex form needs even dimension")
        self.dim = dim
        self.form = form
        self.basis = list(basis) if basis is not None else [
            "X%d" % (k + 1) for k in range(dim)]
        if len(self.basis) != dim:
            raise ValueError("basis label count does not match dimension")
        table: BracketTable = {}
        for (i, j), out in brackets.items():
            if not (0 <= i < j < dim):
                raise ValueError("bracket key (%d, %d) must have 0 <= i < j < dim" % (i, j))
            row: Dict[int, Scalar] = {}
            for k, c in out.items():
                if not 0 <= k < dim:
                    raise ValueError("bracket output index %d out of range" % k)
                v = sc(c)
                if v.im != 0:
                    raise ValueError("structure constants must be real "
                                     "(realify complex algebras first)")
                if v:
                    row[k] = v
            if row:
                table[(i, j)] = row
        self._table = table
        self.sigma = None
        if sigma is not None:
            self.sigma = [[sc(x) for x in row] for row in sigma]
            if len(self.sigma) != dim or any(len(r) != dim for r in self.sigma):
                raise ValueError("sigma must be a dim x dim matrix")

    # -- bracket --------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> List[Scalar]:
        out = [Scalar(0)] * self.dim
        if i == j:
            return out
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for k, c in self._table.get((i, j), {}).items():
            out[k] = c * sign
        return out

    def bracket(self, u: Sequence, v: Sequence) -> List[Scalar]:
        u = [sc(x) for x in u]
        v = [sc(x) for x in v]
        out = [Scalar(0)] * self.dim
        for (i, j), row in self._table.items():
            coef = u[i] * v[j] - u[j] * v[i]
            if coef:
                for k, c in row.items():
                    out[k] = out[k] + coef * c
        return out

    def adjoint(self, v: Sequence) -> List[List[Scalar]]:
        """Matrix of ad(v): w -> [v, w] in the stored basis (columns)."""
        cols = [self.bracket(v, self._e(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def _e(self, k: int) -> List[Scalar]:
        v = [Scalar(0)] * self.dim
        v[k] = Scalar(1)
        return v

    # -- structural checks ------------------------------------------------

    def jacobi_check(self) -> JacobiReport:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                bij = self.bracket_basis(i, j)
                for k in range(j + 1, self.dim):
                    acc = self.bracket(bij, self._e(k))
                    acc = linalg.vec_add(acc, self.bracket(
                        self.bracket_basis(j, k), self._e(i)))
                    acc = linalg.vec_add(acc, self.bracket(
                        self.bracket_basis(k, i), self._e(j)))
                    if not linalg.is_zero_vec(acc):
                        return JacobiReport(False, (i, j, k), acc)
        return JacobiReport(True)

    def derived_subalgebra(self) -> Subspace:
        vecs = [self.bracket_basis(i, j) for (i, j) in self._table]
        return Subspace(self.dim, vecs)

    def _bracket_spaces(self, a: Subspace, b: Subspace) -> Subspace:
        vecs = [self.bracket(u, v) for u in a.basis for v in b.basis]
        return Subspace(self.dim, vecs)

    def lower_central_series(self) -> List[Subspace]:
        full = Subspace(self.dim, linalg.identity(self.dim))
        series = [full]
        while series[-1].dim:
            nxt = self._bracket_spaces(full, series[-1])
            if nxt == series[-1]:
                series.append(nxt)
                break
            series.append(nxt)
        return series

    def derived_series(self) -> List[Subspace]:
        series = [Subspace(self.dim, linalg.identity(self.dim))]
        while series[-1].dim:
            nxt = self._bracket_spaces(series[-1], series[-1])
            if nxt == series[-1]:
                series.append(nxt)
                break
            series.append(nxt)
        return series

    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1].dim == 0

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].dim == 0

    def center(self) -> Subspace:
        # v central iff sum_i v_i [e_i, e_j] = 0 for every j
        rows = []
        for j in range(self.dim):
            for k in range(self.dim):
                rows.append([self.bracket_basis(i, j)[k] for i in range(self.dim)])
        return Subspace(self.dim, linalg.nullspace(rows))

    def unimodular_check(self) -> bool:
        for i in range(self.dim):
            if linalg.mat_trace(self.adjoint(self._e(i))) != 0:
                return False
        return True

    # -- nilradical --------------------------------------------------------

    def nilradical_solvable(self) -> Subspace:
        """Nilradical of a solvable algebra: the set {v : ad(v) nilpotent}.

        Computed as the fixed point of V -> {x in V : trace(M ad(x)) = 0
        for all M in the unital associative algebra generated by ad(V)}.
        Every ad-nilpotent element satisfies all those trace conditions,
        and at the fixed point the conditions force the power sums of the
        eigenvalues of ad(x) to vanish, so the fixed point is exactly the
        set of ad-nilpotent elements. The result is validated post hoc.
        """
        if not self.is_solvable():
            raise NotSolvable("nilradical computation requires a solvable algebra")
        n = self.dim
        ad_basis = [self.adjoint(self._e(i)) for i in range(n)]
        space = Subspace(n, linalg.identity(n))
        while True:
            gens = [self._ad_of(space_row) for space_row in space.basis]
            closure = _associative_closure(gens, n)
            rows = []
            for m in closure:
                rows.append([linalg.mat_trace(linalg.mat_mul(m, ad_basis[i]))
                             for i in range(n)])
            cut = Subspace(n, linalg.nullspace(rows)) if rows else space
            new = space.intersect(cut)
            if new == space:
                break
            space = new
        self._validate_nilradical(space)
        return space

    def _ad_of(self, v: Sequence) -> List[List[Scalar]]:
        return self.adjoint(v)

    def _validate_nilradical(self, space: Subspace) -> None:
        if not (self.derived_subalgebra() <= space):
            raise InternalCheckFailed("nilradical misses the derived subalgebra")
        for v in space.basis:
            if not is_nilpotent_matrix(self.adjoint(v)):
                raise InternalCheckFailed("nilradical element with non-nilpotent ad")
            for i in range(self.dim):
                if not space.contains(self.bracket(self._e(i), v)):
                    raise InternalCheckFailed("nilradical is not an ideal")

    # -- eigenvalue-type classification -------------------------------------

    def classify_type(self, samples: int = 25, seed: Optional[int] = None) -> str:
        """One of nilpotent / completely_solvable / rigid / mixed / inconclusive.

        Verdicts are sampled evidence: exact characteristic polynomials of
        ad(v) for every basis vector plus deterministically seeded rational
        combinations. Root reality and pure-imaginarity are decided exactly
        (Sturm counts; substitution reducing the imaginary-axis test to a
        real one). Requires a solvable real-form algebra.
        """
        if self.form != "real":
            raise ValueError("type classification is defined for real forms")
        if not self.is_solvable():
            raise NotSolvable("type classification requires a solvable algebra")
        rng = random.Random(env_seed() if seed is None else seed)
        pool = [Fraction(k) for k in (-2, -1, 0, 1, 2)] + [
            Fraction(1, 2), Fraction(-1, 2), Fraction(3, 2)]
        vectors: List[List] = [self._e(i) for i in range(self.dim)]
        while len(vectors) < self.dim + samples:
            v = [rng.choice(pool) for _ in range(self.dim)]
            if any(v):
                vectors.append([sc(x) for x in v])
        all_nilpotent = True
        saw_nonreal = False
        saw_nonimaginary = False
        for v in vectors:
            p = linalg.char_poly(self.adjoint(v))
            nilp = all(p[k] == 0 for k in range(p.degree))
            if nilp:
                continue
            all_nilpotent = False
            if not all_roots_real(p):
                saw_nonreal = True
            if not all_roots_pure_imaginary(p):
                saw_nonimaginary = True
        if all_nilpotent:
            return "nilpotent"
        if saw_nonreal and saw_nonimaginary:
            return "mixed"
        if not saw_nonreal:
            return "completely_solvable"
        if not saw_nonimaginary:
            return "rigid"
        return "inconclusive"

    # -- complexification ----------------------------------------------------

    def complexify(self) -> "LieAlgebra":
        """The complexification in the split basis (X_1..X_n, iX_1..iX_n).

        Returns the 2n-dimensional real description with form "complex" and
        the standard conjugation sigma = diag(I, -I) fixing the embedded
        original algebra.
        """
        n = self.dim
        brackets: Dict[Tuple[int, int], Dict[int, Scalar]] = {}

        def put(i: int, j: int, k: int, c: Scalar):
            if i == j or not c:
                return
            if i > j:
                i, j, c = j, i, -c
            brackets.setdefault((i, j), {})
            brackets[(i, j)][k] = brackets[(i, j)].get(k, Scalar(0)) + c

        for (i, j), row in self._table.items():
            for k, c in row.items():
                put(i, j, k, c)                    # [X_i, X_j] = c X_k
                put(i, n + j, n + k, c)            # [X_i, iX_j] = c iX_k
                put(n + i, j, n + k, c)            # [iX_i, X_j] = c iX_k
                put(n + i, n + j, k, -c)           # [iX_i, iX_j] = -c X_k
        sigma = [[Scalar(1 if (i == j and i < n) else (-1 if (i == j) else 0))
                  for j in range(2 * n)] for i in range(2 * n)]
        labels = self.basis + ["i*%s" % b for b in self.basis]
        out = LieAlgebra(2 * n, {k: dict(v) for k, v in brackets.items()},
                         basis=labels, form="complex", sigma=sigma)
        return out

    def mult_i_matrix(self) -> List[List[Scalar]]:
        """Multiplication by i on a complex-form algebra (split-basis block map)."""
        if self.form != "complex":
            raise ValueError("mult_i is defined on complex-form algebras")
        m = self.dim // 2
        out = [[Scalar(0)] * self.dim for _ in range(self.dim)]
        for k in range(m):
            out[m + k][k] = Scalar(1)
            out[k][m + k] = Scalar(-1)
        return out

    @property
    def complex_dim(self) -> int:
        if self.form != "complex":
            raise ValueError("complex_dim is defined on complex-form algebras")
        return self.dim // 2

    def __repr__(self):
        return "LieAlgebra(dim=%d, form=%r)" % (self.dim, self.form)


def is_nilpotent_matrix(m: List[List[Scalar]]) -> bool:
    n = len(m)
    return linalg.mat_eq(linalg.mat_pow(m, n),
                         [[Scalar(0)] * n for _ in range(n)])


def _flatten(m) -> List:
    return [x for row in m for x in row]


def _associative_closure(gens: List, n: int) -> List:
    """Basis of the unital associative algebra generated by the given matrices."""
    basis_mats: List = []
    echelon: List[List] = []
    leads: List[int] = []

    def try_add(m) -> bool:
        red = _flatten(m)
        for lead, row in zip(leads, echelon):
            if red[lead]:
                f = red[lead]
                red = [x - f * y for x, y in zip(red, row)]
        piv = next((c for c, x in enumerate(red) if x), None)
        if piv is None:
            return False
        inv = red[piv]
        echelon.append([x / inv for x in red])
        leads.append(piv)
        basis_mats.append(m)
        return True

    try_add(linalg.identity(n))
    for g in gens:
        try_add(g)
    frontier = list(basis_mats)
    while frontier:
        new_frontier = []
        for m in frontier:
            for g in gens:
                prod = linalg.mat_mul(m, g)
                if try_add(prod):
                    new_frontier.append(prod)
        frontier = new_frontier
    return basis_mats


def realify_complex_brackets(cdim: int, brackets: Dict[Tuple[int, int], Dict[int, object]],
                             basis: Optional[Sequence[str]] = None) -> LieAlgebra:
    """Real description of a complex Lie algebra given by complex constants.

    brackets maps (i, j) with 0 <= i < j < cdim to {k: scalar-like}, where
    scalars may be genuinely complex. The result has dimension 2*cdim, real
    constants, form "complex", and the split-basis convention.
    """
    n = cdim
    out: Dict[Tuple[int, int], Dict[int, Scalar]] = {}

    def put(i: int, j: int, k: int, c: Scalar):
        if i == j or not c:
            return
        sign = Scalar(1)
        if i > j:
            i, j, sign = j, i, Scalar(-1)
        row = out.setdefault((i, j), {})
        row[k] = row.get(k, Scalar(0)) + sign * c

    for (i, j), row in brackets.items():
        for k, raw in row.items():
            c = sc(raw)
            a, b = Scalar(c.re), Scalar(c.im)
            # [Z_i, Z_j] = (a + ib) Z_k, extended C-bilinearly to the split basis
            put(i, j, k, a)
            put(i, j, n + k, b)
            put(i, n + j, n + k, a)
            put(i, n + j, k, -b)
            put(n + i, j, n + k, a)
            put(n + i, j, k, -b)
            put(n + i, n + j, k, -a)
            put(n + i, n + j, n + k, -b)
    labels = None
    if basis is not None:
        labels = list(basis) + ["i*%s" % b for b in basis]
    return LieAlgebra(2 * n, {k: dict(v) for k, v in out.items()},
                      basis=labels, form="complex")
