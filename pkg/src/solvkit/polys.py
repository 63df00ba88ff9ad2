"""Exact univariate polynomials over the rationals.

Coefficients are fractions.Fraction, stored ascending (coeffs[k] is the
t^k coefficient). This module carries the root-locating machinery the
rest of the toolkit leans on: Sturm-sequence real-root counts, the
all-roots-real and all-roots-pure-imaginary tests, unit-modulus root
detection for the reciprocal polynomials coming from integer matrices,
and factorization over Q (delegated to sympy, which is exact).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [Fraction(c) if not isinstance(c, float) else None for c in coeffs]
        if any(c is None for c in cs):
            raise TypeError("float coefficient; polynomials are exact")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- basics ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial has degree -1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero:
            return "Poly(0)"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self[k]
            if c == 0:
                continue
            mono = "1" if k == 0 else ("t" if k == 1 else "t^%d" % k)
            terms.append("%s*%s" % (c, mono) if k else str(c))
        return "Poly(%s)" % " + ".join(terms)

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] + other[k] for k in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] - other[k] for k in range(n)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly([]), self
        quo = [Fraction(0)] * (dq + 1)
        lead = other.leading()
        for k in range(dq, -1, -1):
            top = rem[k + other.degree]
            if top == 0:
                continue
            f = top / lead
            quo[k] = f
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= f * b
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lead = self.leading()
        return Poly([c / lead for c in self.coeffs])

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    # -- evaluation --------------------------------------------------------

    def eval_fraction(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_complex(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    # -- structure -----------------------------------------------------------

    def reciprocal(self) -> "Poly":
        """t^deg * p(1/t): the coefficient sequence reversed."""
        return Poly(list(reversed(self.coeffs)))

    def compose_negate(self) -> "Poly":
        """p(-t): flips the sign of odd-degree coefficients."""
        return Poly([c if k % 2 == 0 else -c
                     for k, c in enumerate(self.coeffs)])

    def is_palindromic(self) -> bool:
        return not self.is_zero and self.coeffs == tuple(reversed(self.coeffs))


def poly_from_descending(coeffs: Sequence) -> Poly:
    return Poly(list(reversed(list(coeffs))))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def squarefree_part(p: Poly) -> Poly:
    """p divided by gcd(p, p'); same root set, every root simple."""
    if p.is_zero or p.degree == 0:
        return p.monic() if not p.is_zero else p
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


def is_squarefree(p: Poly) -> bool:
    if p.is_zero:
        return False
    if p.degree == 0:
        return True
    return poly_gcd(p, p.derivative()).degree == 0


# -- Sturm sequences ---------------------------------------------------------


def sturm_chain(p: Poly) -> list:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero:
        chain.pop()
    return chain


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Iterable[int]) -> int:
    seq = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(seq, seq[1:]) if a != b)


def _sign_at_inf(p: Poly, positive: bool) -> int:
    if p.is_zero:
        return 0
    s = _sign(p.leading())
    if not positive and p.degree % 2 == 1:
        s = -s
    return s


def count_real_roots(p: Poly) -> int:
    """Number of distinct real roots of p (whole real line)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    q = squarefree_part(p)
    if q.degree <= 0:
        return 0
    chain = sturm_chain(q)
    v_neg = _variations(_sign_at_inf(f, positive=False) for f in chain)
    v_pos = _variations(_sign_at_inf(f, positive=True) for f in chain)
    return v_neg - v_pos


def _count_roots_open(q: Poly, a, b) -> int:
    # q squarefree with q(a) != 0 != q(b); counts roots in the open (a, b)
    chain = sturm_chain(q)
    va = _variations(_sign(f.eval_fraction(a)) for f in chain)
    vb = _variations(_sign(f.eval_fraction(b)) for f in chain)
    return va - vb


def count_real_roots_in(p: Poly, a, b) -> int:
    """Distinct real roots of p in the closed interval [a, b], exactly."""
    a, b = Fraction(a), Fraction(b)
    if a > b:
        raise ValueError("empty interval")
    q = squarefree_part(p)
    if q.degree <= 0:
        return 0
    count = 0
    for end in ({a, b} if a != b else {a}):
        if q.eval_fraction(end) == 0:
            count += 1
            q = q // Poly([-end, 1])
    if a == b or q.degree <= 0:
        return count
    if q.eval_fraction(a) == 0 or q.eval_fraction(b) == 0:
        raise AssertionError("endpoint root survived division")
    return count + _count_roots_open(q, a, b)


def count_negative_real_roots(p: Poly) -> int:
    """Distinct real roots in (-inf, 0). Zero is not counted."""
    q = squarefree_part(p)
    if q.degree <= 0:
        return 0
    if q.eval_fraction(0) == 0:
        q = q // Poly([0, 1])
        if q.degree <= 0:
            return 0
    chain = sturm_chain(q)
    v_neg = _variations(_sign_at_inf(f, positive=False) for f in chain)
    v0 = _variations(_sign(f.eval_fraction(Fraction(0))) for f in chain)
    return v_neg - v0


# -- root-location predicates -------------------------------------------------


def all_roots_real(p: Poly) -> bool:
    """True iff every complex root of p is real (multiplicity ignored)."""
    q = squarefree_part(p)
    if q.degree <= 0:
        return True
    return count_real_roots(q) == q.degree


def all_roots_pure_imaginary(p: Poly) -> bool:
    """True iff every root of p lies on the imaginary axis (0 included).

    With real coefficients the distinct nonzero roots pair up as +-i*s,
    so the squarefree part must be t^e * g(t^2) with g having all roots
    real and negative. Both conditions are decided exactly.
    """
    q = squarefree_part(p)
    if q.degree <= 0:
        return True
    if q.eval_fraction(0) == 0:
        q = q // Poly([0, 1])
    if q.degree == 0:
        return True
    if any(q[k] != 0 for k in range(1, q.degree + 1, 2)):
        return False
    g = Poly([q[2 * k] for k in range(q.degree // 2 + 1)])
    if count_real_roots(g) != g.degree:
        return False
    return count_negative_real_roots(g) == g.degree


def descartes_positive_count(p: Poly) -> int:
    """Sign variations of the coefficient sequence.

    Equals the number of positive roots (with multiplicity) whenever all
    roots are real, which is the only way the toolkit uses it.
    """
    return _variations(_sign(c) for c in reversed(p.coeffs))


# -- unit-modulus roots -------------------------------------------------------


def palindromic_quartic_reduction(p_coeff: Fraction, q_coeff: Fraction) -> Poly:
    """For t^4 + p t^3 + q t^2 + p t + 1, the quadratic in c = (t + 1/t)/2.

    Unit-circle roots t = e^{i*phi} correspond exactly to real roots
    c = cos(phi) of 4c^2 + 2pc + (q - 2) inside [-1, 1].
    """
    return Poly([q_coeff - 2, 2 * p_coeff, Fraction(4)])


def has_unit_modulus_root(p: Poly) -> bool:
    """Exact test for a root of modulus one (rational coefficients, deg <= 4).

    Any unit-modulus root of a real polynomial is shared with its
    reciprocal, so the test reduces along gcd(p, p*) to self-reciprocal
    polynomials, where degree <= 2 is handled directly and palindromic
    quartics via the c = (t + 1/t)/2 substitution.
    """
    q = squarefree_part(p)
    if q.degree <= 0:
        return False
    rec = q.reciprocal()
    if q.monic() != rec.monic() and q.monic() != (-rec).monic():
        g = poly_gcd(q, rec)
        if g.degree <= 0:
            return False
        return has_unit_modulus_root(g)
    # self-reciprocal (up to sign) from here on
    if q.eval_fraction(1) == 0 or q.eval_fraction(-1) == 0:
        return True
    if q.degree == 1:
        return False  # root is rational and not +-1
    if q.degree == 2:
        disc = q[1] * q[1] - 4 * q[2] * q[0]
        if disc < 0:
            return q[0] / q[2] == 1  # conjugate pair with |z|^2 = q0/q2
        return False  # real roots of modulus one are +-1, tested above
    if q.degree == 3:
        # odd self-reciprocal has a root at -1 or +1, already handled
        return False
    if q.degree == 4 and q.is_palindromic():
        m = q.monic()
        reduced = palindromic_quartic_reduction(m[3], m[2])
        return count_real_roots_in(reduced, -1, 1) > 0
    if q.degree == 4:
        # anti-palindromic quartic: t^4 + pt^3 - pt - 1 has roots +-1
        return False
    raise ValueError("unit-modulus test implemented for degree <= 4 only")


# -- factorization over Q (sympy-backed) -------------------------------------


def factor_rational(p: Poly) -> list:
    """Irreducible monic factors of p over Q with multiplicities.

    Returns [(Poly, multiplicity), ...]. Factorization over Q is textbook
    infrastructure, so it is delegated to sympy rather than re-derived.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    import sympy

    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t**k
               for k, c in enumerate(p.coeffs))
    _, factors = sympy.factor_list(sympy.Poly(expr, t))
    out = []
    for fac, mult in factors:
        coeffs = [Fraction(int(c.p), int(c.q))
                  for c in reversed(sympy.Poly(fac, t).all_coeffs())]
        out.append((Poly(coeffs).monic(), int(mult)))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out
