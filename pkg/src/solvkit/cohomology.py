"""Low-degree Chevalley-Eilenberg cochains and first-cohomology counts.

Cochains are alternating forms with exact coefficients, stored sparsely on
strictly increasing index tuples up to degree 3 (enough for d of 1- and
2-forms plus the d^2 checks; nothing in scope needs degree 4).

h1 for a lattice quotient splits as a Lie-algebra part plus the dimension
of the largest subspace of [g,g]/[n,n] on which the holonomy acts
semisimply with only real eigenvalues. The holonomy part is decided
exactly: factor each minimal polynomial over the rationals, keep the
primary components of the factors all of whose roots are real (Sturm
count equals degree), and intersect over the generators. Generators in
scope are semisimple integer matrices whose irreducible factors have
either all roots real or none, so this rational computation yields the
true maximal subspace.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .errors import (DegreeTooHigh, InternalCheckFailed, NonCommutingHolonomy,
                     NonSemisimpleGenerator, NotNilpotent, NotSolvable)
from .liealg import LieAlgebra
from .linalg import Subspace
from .polys import Poly, all_roots_real, factor_rational, is_squarefree
from .scalars import Scalar, sc

MAX_DEGREE = 3


class Cochain:
    """Alternating k-form on an n-dimensional algebra, k <= 3."""

    def __init__(self, dim: int, degree: int, coeffs: Optional[Dict] = None):
        if degree < 0 or degree > MAX_DEGREE:
            raise DegreeTooHigh("cochain degree %d not supported" % degree)
        if dim < 1:
            raise ValueError("positive dimension required")
        self.dim = dim
        self.degree = degree
        self.coeffs: Dict[Tuple[int, ...], Scalar] = {}
        for key, val in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != degree:
                raise ValueError("key %r does not match degree %d" % (key, degree))
            if any(not 0 <= i < dim for i in key):
                raise ValueError("index out of range in %r" % (key,))
            if any(key[t] >= key[t + 1] for t in range(len(key) - 1)):
                raise ValueError("indices must be strictly increasing: %r" % (key,))
            v = sc(val)
            if v:
                self.coeffs[key] = v

    def coefficient(self, *indices: int) -> Scalar:
        """Value on the given basis indices, any order, exact sign handling."""
        if len(indices) != self.degree:
            raise ValueError("expected %d indices" % self.degree)
        if len(set(indices)) != len(indices):
            return Scalar(0)
        order = sorted(range(len(indices)), key=lambda t: indices[t])
        key = tuple(sorted(indices))
        sign = _perm_sign(order)
        base = self.coeffs.get(key, Scalar(0))
        return base if sign == 1 else -base

    def evaluate(self, *vectors: Sequence) -> Scalar:
        if len(vectors) != self.degree:
            raise ValueError("expected %d vectors" % self.degree)
        vecs = [[sc(x) for x in v] for v in vectors]
        if self.degree == 0:
            return self.coeffs.get((), Scalar(0))
        total = Scalar(0)
        for key, val in self.coeffs.items():
            # sum over assignments of the key's indices to argument slots
            total = total + val * _alt_minor(vecs, key)
        return total

    def add(self, other: "Cochain") -> "Cochain":
        if (self.dim, self.degree) != (other.dim, other.degree):
            raise ValueError("cochain shape mismatch")
        out = dict(self.coeffs)
        for key, val in other.coeffs.items():
            out[key] = out.get(key, Scalar(0)) + val
        return Cochain(self.dim, self.degree, out)

    def scale(self, factor) -> "Cochain":
        f = sc(factor)
        return Cochain(self.dim, self.degree,
                       {k: f * v for k, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, Cochain)
                and (self.dim, self.degree) == (other.dim, other.degree)
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return "Cochain(dim=%d, degree=%d, %d terms)" % (
            self.dim, self.degree, len(self.coeffs))


def _perm_sign(order: List[int]) -> int:
    sign = 1
    seen = [False] * len(order)
    for i in range(len(order)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _alt_minor(vecs: List[List[Scalar]], key: Tuple[int, ...]) -> Scalar:
    """det of the matrix (vecs[r][key[c]]) — the alternating evaluation."""
    k = len(key)
    m = [[vecs[r][key[c]] for c in range(k)] for r in range(k)]
    return linalg.det(m)


def one_form(dim: int, index: int, coeff=1) -> Cochain:
    return Cochain(dim, 1, {(index,): sc(coeff)})


def two_form_terms(dim: int, terms: Dict[Tuple[int, int], object]) -> Cochain:
    return Cochain(dim, 2, {k: sc(v) for k, v in terms.items()})


def ce_d(l: LieAlgebra, c: Cochain) -> Cochain:
    """Chevalley-Eilenberg differential, exact, degrees 0 through 2."""
    if c.dim != l.dim:
        raise ValueError("cochain does not live on this algebra")
    if c.degree > 2:
        raise DegreeTooHigh("d only implemented up to degree 2 input")
    n = l.dim
    if c.degree == 0:
        return Cochain(n, 1)
    out: Dict[Tuple[int, ...], Scalar] = {}
    if c.degree == 1:
        for i in range(n):
            for j in range(i + 1, n):
                w = l.bracket_basis(i, j)
                val = Scalar(0)
                for m, coef in enumerate(w):
                    if coef:
                        val = val - coef * c.coefficient(m)
                if val:
                    out[(i, j)] = val
        return Cochain(n, 2, out)
    # degree 2: d(w)(x,y,z) = -w([x,y],z) + w([x,z],y) - w([y,z],x)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                val = Scalar(0)
                for m, coef in enumerate(l.bracket_basis(i, j)):
                    if coef:
                        val = val - coef * c.coefficient(m, k)
                for m, coef in enumerate(l.bracket_basis(i, k)):
                    if coef:
                        val = val + coef * c.coefficient(m, j)
                for m, coef in enumerate(l.bracket_basis(j, k)):
                    if coef:
                        val = val - coef * c.coefficient(m, i)
                if val:
                    out[(i, j, k)] = val
    return Cochain(n, 3, out)


def h1_lie(l: LieAlgebra) -> int:
    """dim g - dim [g,g]; complex dimension for complex-form algebras."""
    drop = 2 if l.form == "complex" else 1
    value = l.dim - l.derived_subalgebra().dim
    if value % drop:
        raise ValueError("derived subalgebra is not i-invariant")
    return value // drop


def h1_lie_by_kernel(l: LieAlgebra) -> int:
    """Same number via the exact kernel of d on 1-forms (cross-check route)."""
    n = l.dim
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            w = l.bracket_basis(i, j)
            row = [-coef for coef in w]
            rows.append(row)
    rank = linalg.rank(rows) if rows else 0
    value = n - rank
    drop = 2 if l.form == "complex" else 1
    if value % drop:
        raise ValueError("kernel of d is not i-invariant")
    return value // drop


class HolonomyAction:
    """Commuting exact semisimple matrices acting on [g,g]/[n,n]."""

    def __init__(self, generators: Sequence[Sequence[Sequence[object]]]):
        self.generators: List[List[List[Fraction]]] = []
        for g in generators:
            mat = [[_to_fraction(x) for x in row] for row in g]
            size = len(mat)
            if any(len(row) != size for row in mat):
                raise ValueError("holonomy generator must be square")
            self.generators.append(mat)
        sizes = {len(g) for g in self.generators}
        if len(sizes) > 1:
            raise ValueError("holonomy generators must share one size")
        self.size = sizes.pop() if sizes else 0
        for g in self.generators:
            if linalg.det([[Scalar(x) for x in row] for row in g]) == Scalar(0):
                raise ValueError("holonomy generator is singular")
            if not is_squarefree(linalg.min_poly(g)):
                raise NonSemisimpleGenerator(
                    "generator has a repeated minimal-polynomial factor")
        for a in range(len(self.generators)):
            for b in range(a + 1, len(self.generators)):
                ga, gb = self.generators[a], self.generators[b]
                if _frac_mul(ga, gb) != _frac_mul(gb, ga):
                    raise NonCommutingHolonomy(
                        "generators %d and %d do not commute" % (a, b))

    def __len__(self):
        return len(self.generators)


def _to_fraction(x) -> Fraction:
    if isinstance(x, Scalar):
        if x.im != 0:
            raise ValueError("holonomy entries must be real")
        return x.re
    if isinstance(x, float):
        raise TypeError("exact entries required, got float")
    return Fraction(x)


def _frac_mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]


def real_part_subspace(g: List[List[Fraction]]) -> Subspace:
    """Sum of the primary components whose irreducible factor is totally real.

    For a semisimple matrix this is the largest rational invariant subspace
    on which the action is diagonalizable over R, provided every
    irreducible factor has all roots real or none (Sturm count 0 or full).
    """
    n = len(g)
    m = linalg.min_poly(g)
    out_vectors: List[List[Scalar]] = []
    for factor, _mult in factor_rational(m):
        if factor.degree < 1:
            continue
        if not all_roots_real(factor):
            continue
        fg = _poly_apply(factor, g)
        ker = linalg.nullspace([[Scalar(x) for x in row] for row in fg])
        out_vectors.extend(ker)
    return Subspace(n, out_vectors)


def _poly_apply(p: Poly, g: List[List[Fraction]]):
    n = len(g)
    acc = [[Fraction(0)] * n for _ in range(n)]
    power = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for c in p.coeffs:
        if c:
            for i in range(n):
                for j in range(n):
                    acc[i][j] += c * power[i][j]
        power = _frac_mul(power, g)
    return acc


def quotient_dim(l: LieAlgebra) -> int:
    """Real dimension of [g,g]/[n,n] for a solvable algebra."""
    derived = l.derived_subalgebra()
    nil = l.nilradical_solvable()
    nn_vectors = []
    basis = nil.basis
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            nn_vectors.append(l.bracket(basis[a], basis[b]))
    nn = Subspace(l.dim, nn_vectors)
    if not (nn <= derived):
        raise InternalCheckFailed("[n,n] escaped the derived subalgebra")
    return derived.dim - nn.dim


def winkelmann_h1(l: LieAlgebra, h: HolonomyAction) -> Dict[str, int]:
    """h1 of the quotient: h1_lie plus the real-semisimple holonomy part.

    Returns {"h1": total, "h1_lie": base, "dimW": extra} with dimensions
    complex whenever the algebra carries the complex-form marker.
    """
    if not l.is_solvable():
        raise NotSolvable("Winkelmann count needs a solvable algebra")
    base = h1_lie(l)
    q_dim = quotient_dim(l)
    if h.generators and h.size != q_dim:
        raise ValueError(
            "holonomy acts on dimension %d but [g,g]/[n,n] has dimension %d"
            % (h.size, q_dim))
    if q_dim == 0:
        dim_w_real = 0
    else:
        w = Subspace(q_dim, [
            [Scalar(1 if i == j else 0) for j in range(q_dim)]
            for i in range(q_dim)])
        for g in h.generators:
            w = w.intersect(real_part_subspace(g))
        dim_w_real = w.dim
    drop = 2 if l.form == "complex" else 1
    if dim_w_real % drop:
        raise ValueError("holonomy subspace has odd real dimension")
    dim_w = dim_w_real // drop
    return {"h1": base + dim_w, "h1_lie": base, "dimW": dim_w}


def closed_holomorphic_1forms(lc: LieAlgebra) -> int:
    """Count of independent closed holomorphic 1-forms on a nilpotent quotient.

    Exactly the complex codimension of the derived subalgebra; equals the
    complex dimension only in the abelian (torus) case.
    """
    if lc.form != "complex":
        raise ValueError("complex-form algebra required")
    if not lc.is_nilpotent():
        raise NotNilpotent("closed-1-form count is only valid for nilpotent algebras")
    return h1_lie(lc)


def pseudo_kahler_obstruction(n: int, h1: int) -> str:
    """Necessary condition h1 >= n; 'obstructed' when it fails."""
    if n < 1:
        raise ValueError("complex dimension must be positive")
    return "obstructed" if h1 < n else "passes"
