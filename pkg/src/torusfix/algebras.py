"""Endomorphism algebras of simple abelian surfaces.

Three non-trivial types occur: real multiplication by Q(sqrt(d)),
indefinite quaternion multiplication, and complex multiplication by a
quartic CM field.  Integer multiplication is folded into the real
quadratic elements with b = 0.  The reduced-norm fixed-point formula
fix(f) = N(1-f)^(4/de) specializes to exponent 2 (quaternion) and 1 (CM).

Division-algebra verification is not performed up front; non-division
symbols are detected lazily through the per-element contradictions
(zero norm, or a root +-1 on an element that is not +-1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Optional

from . import behavior as _behavior
from .errors import (
    InvalidEndomorphismError,
    NonIntegralError,
    NotDivisionAlgebraError,
    ZeroEndomorphismError,
    ZeroNormError,
)
from .endomorphisms import AnalyticRep, RationalRep, charpoly_frac
from .polynomials import (
    IntPolynomial,
    cyclotomic,
    is_square_rational,
    rational_roots,
    square_free_part,
    count_real_roots,
)
from .unitcircle import (
    CharPolyQuartic,
    _max_real_root_exceeds,
    _resolvent_cubic,
)


def _square_free_kernel(n: int) -> int:
    """The square-free part: product of the primes of odd exponent, so that
    sqrt(n) = k * sqrt(kernel) with k an integer."""
    n = abs(n)
    out = 1
    d = 2
    while d * d <= n:
        exp = 0
        while n % d == 0:
            n //= d
            exp += 1
        if exp % 2:
            out *= d
        d += 1
    return out * n


# -- Type 0/1: integer and real multiplication --------------------------------


@dataclass(frozen=True)
class RealQuadElement:
    """a + b*omega in Z[omega] inside Q(sqrt(d)), d > 1 square-free;
    omega = sqrt(d) for d = 2,3 (mod 4) and (1+sqrt(d))/2 for d = 1 (mod 4).

    b = 0 covers integer multiplication (endomorphism ring Z)."""

    d: int
    a: int
    b: int

    def __post_init__(self):
        if self.d <= 1 or _square_free_kernel(self.d) != self.d:
            raise ValueError("d must be a square-free integer > 1")

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0


def _omega_trace_norm(d: int) -> tuple[int, Fraction]:
    if d % 4 == 1:
        return 1, Fraction(1 - d, 4)
    return 0, Fraction(-d)


def rm_eigenvalues(x: RealQuadElement) -> tuple[tuple[Fraction, Fraction, int], ...]:
    """The two analytic eigenvalues as (u, v, d) meaning u + v*sqrt(d)."""
    if x.d % 4 == 1:
        u = Fraction(2 * x.a + x.b, 2)
        v = Fraction(x.b, 2)
    else:
        u = Fraction(x.a)
        v = Fraction(x.b)
    return ((u, v, x.d), (u, -v, x.d))


def rm_char_poly(x: RealQuadElement) -> CharPolyQuartic:
    """P^r = (t^2 - Tr(x) t + N(x))^2: the analytic quadratic is already
    rational (its two roots are the two real embeddings)."""
    tr_w, n_w = _omega_trace_norm(x.d)
    tr = 2 * x.a + x.b * tr_w
    nrm = Fraction(x.a * x.a) + x.a * x.b * tr_w + x.b * x.b * n_w
    assert nrm.denominator == 1
    quad = IntPolynomial((int(nrm), -tr, 1))
    return CharPolyQuartic(quad * quad)


def rm_fix(x: RealQuadElement, n: int) -> int:
    from .endomorphisms import fix_count_quartic

    return fix_count_quartic(rm_char_poly(x).poly, n)


def rm_classify(x: RealQuadElement) -> "_behavior.BehaviorReport":
    """Periodic only for x = +-1; exponential otherwise (never B3)."""
    if x.is_zero():
        raise ZeroEndomorphismError("zero element of the real quadratic order")
    report = _behavior.classify(rm_char_poly(x))
    expected_b2 = x.b == 0 and abs(x.a) == 1
    assert (report.verdict == _behavior.B2) == expected_b2
    assert report.verdict != _behavior.B3
    return report


# -- Type 2: indefinite quaternion multiplication ------------------------------


@dataclass(frozen=True)
class QuaternionAlgebraDesc:
    """Quaternion symbol (alpha, beta) with i^2 = alpha, j^2 = beta,
    ij = -ji, normalized so alpha > 0 and alpha >= beta.  The symbol as
    originally supplied is kept for reporting."""

    alpha: Fraction
    beta: Fraction
    original: Optional[tuple[Fraction, Fraction]] = None

    def __post_init__(self):
        if self.alpha == 0 or self.beta == 0:
            raise ValueError("alpha and beta must be non-zero")
        if not (self.alpha > 0 and self.alpha >= self.beta):
            raise ValueError("normalized symbol requires alpha > 0, alpha >= beta")

    @classmethod
    def normalized(cls, alpha, beta) -> tuple["QuaternionAlgebraDesc", bool]:
        """Returns the normalized descriptor and whether i and j were swapped."""
        alpha, beta = Fraction(alpha), Fraction(beta)
        if alpha > 0 and alpha >= beta:
            return cls(alpha, beta, original=(alpha, beta)), False
        if beta > 0 and beta >= alpha:
            return cls(beta, alpha, original=(alpha, beta)), True
        raise ValueError(
            f"symbol ({alpha},{beta}) is definite: no positive entry dominates"
        )


@dataclass(frozen=True)
class QuaternionElement:
    """a + b i + c j + d ij with rational coordinates."""

    algebra: QuaternionAlgebraDesc
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __init__(self, algebra, a, b, c, d):
        object.__setattr__(self, "algebra", algebra)
        for name, val in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, name, Fraction(val))

    def is_zero(self) -> bool:
        return self.a == self.b == self.c == self.d == 0

    def is_scalar(self) -> bool:
        return self.b == self.c == self.d == 0


def quaternion_element(alpha, beta, a, b, c, d) -> QuaternionElement:
    """Build an element, normalizing the symbol; if i and j are swapped the
    coordinates are relabeled (b <-> c; the ij coordinate only enters
    through d^2, so its sign is immaterial)."""
    desc, swapped = QuaternionAlgebraDesc.normalized(alpha, beta)
    if swapped:
        b, c = c, b
    return QuaternionElement(desc, a, b, c, d)


def quat_reduced_norm(x: QuaternionElement) -> Fraction:
    al, be = x.algebra.alpha, x.algebra.beta
    return x.a ** 2 - x.b ** 2 * al - x.c ** 2 * be + x.d ** 2 * al * be


def quat_reduced_trace(x: QuaternionElement) -> Fraction:
    return 2 * x.a


def quat_reduced_charpoly(x: QuaternionElement) -> IntPolynomial:
    """t^2 - tr(x) t + N(x); integer coefficients iff x is integral."""
    tr = quat_reduced_trace(x)
    nrm = quat_reduced_norm(x)
    if tr.denominator != 1 or nrm.denominator != 1:
        raise NonIntegralError(
            f"element has trace {tr}, norm {nrm}: not in an order"
        )
    return IntPolynomial((int(nrm), -int(tr), 1))


@dataclass(frozen=True)
class QuatRootData:
    """The roots t_i = a +- sqrt(disc) of the reduced char poly, with
    disc = b^2 alpha + c^2 beta - d^2 alpha beta = a^2 - N(x)."""

    disc: Fraction
    kind: str  # "rational" | "real_quadratic" | "complex_pair"
    t_pair: str

    @property
    def t_pair_description(self) -> str:
        return self.t_pair


def quat_root_data(x: QuaternionElement) -> QuatRootData:
    disc = x.a ** 2 - quat_reduced_norm(x)
    root = is_square_rational(disc)
    if root is not None:
        return QuatRootData(disc, "rational", f"{x.a + root} and {x.a - root}")
    if disc > 0:
        return QuatRootData(disc, "real_quadratic", f"{x.a} +- sqrt({disc})")
    return QuatRootData(disc, "complex_pair", f"{x.a} +- sqrt({disc})")


def quat_char_poly(x: QuaternionElement) -> CharPolyQuartic:
    chi = quat_reduced_charpoly(x)
    return CharPolyQuartic(chi * chi)


def quat_fix(x: QuaternionElement, n: int) -> int:
    """fix(x^n) = ((1 - t1^n)(1 - t2^n))^2 = Res(chi, 1 - t^n)^2."""
    from .endomorphisms import fix_count_quartic

    return fix_count_quartic(quat_char_poly(x).poly, n)


def quat_one_root_periodicity_criterion(x: QuaternionElement) -> bool:
    """|a + sqrt(b^2 alpha + c^2 beta - d^2 alpha beta)| = 1, exactly.

    This is the single-root phrasing of the periodicity criterion; the
    classifier itself uses the symmetric both-roots condition (the mixed
    case cannot occur in a division algebra)."""
    disc = x.a ** 2 - quat_reduced_norm(x)
    root = is_square_rational(disc)
    if root is not None:
        return abs(x.a + root) == 1
    if disc > 0:
        return False  # an irrational real root never has absolute value 1
    # complex: |a + i sqrt(-disc)|^2 = a^2 - disc = N(x)
    return quat_reduced_norm(x) == 1


def quat_classify(x: QuaternionElement) -> "_behavior.BehaviorReport":
    """Theorem-B decision for quaternion elements: B2 iff both roots of the
    reduced char poly lie on the unit circle, B1 otherwise; the mixed case
    certifies that the symbol is not a division algebra."""
    if x.is_zero():
        raise ZeroEndomorphismError("zero quaternion element")
    nrm = quat_reduced_norm(x)
    if nrm == 0:
        raise ZeroNormError(
            f"non-zero element {x} has reduced norm 0: "
            f"({x.algebra.alpha},{x.algebra.beta}) is not a division algebra"
        )
    chi = quat_reduced_charpoly(x)
    pm_one_root = chi(1) == 0 or chi(-1) == 0
    if pm_one_root and not (x.is_scalar() and abs(x.a) == 1):
        raise NotDivisionAlgebraError(
            f"element {x} has eigenvalue +-1 without being +-1: "
            "the norm of x -+ 1 vanishes, so the symbol is not a division algebra"
        )
    report = _behavior.classify(quat_char_poly(x))
    assert report.verdict != _behavior.B3, "mixed behaviour is impossible here"
    return report


# -- Type 3: complex multiplication --------------------------------------------


@dataclass(frozen=True)
class CMFieldDesc:
    """Quartic CM field Q[t]/(g): g monic irreducible, totally imaginary,
    with a real quadratic subfield Q(sqrt(d)).

    ``d`` is derived during validation; ``e`` optionally records the
    square-free positive integer with lambda = a + b sqrt(-e) when a
    degree-2 decomposition of an eigenvalue is supplied by the caller."""

    defining_poly: IntPolynomial
    d: Optional[int] = None
    e: Optional[int] = None

    def __post_init__(self):
        g = self.defining_poly
        if g.degree != 4 or not g.is_monic():
            raise ValueError("monic integer quartic required")
        if not _is_irreducible_quartic(g):
            raise ValueError(f"{g} is reducible over Q")
        if count_real_roots(square_free_part(g)) != 0:
            raise ValueError(f"{g} is not totally imaginary")
        d = _real_quadratic_subfield_radicand(g)
        if d is None:
            raise ValueError(f"Q[t]/({g}) has no real quadratic subfield: not CM")
        if self.d is None:
            object.__setattr__(self, "d", d)
        elif self.d != d:
            raise ValueError(f"declared subfield radicand {self.d}, computed {d}")


def _is_irreducible_quartic(g: IntPolynomial) -> bool:
    if rational_roots(g):
        return False
    # search integer quadratic factorizations (t^2+pt+q)(t^2+rt+s)
    c0, c1, c2, c3, _ = g.coeffs
    for q in _divisor_pairs(c0):
        s, q = q  # (s, q) with q*s = c0
        # p + r = c3; pr = c2 - q - s; p s + q r = c1
        prod = c2 - q - s
        disc = c3 * c3 - 4 * prod
        root = math.isqrt(abs(disc)) if disc >= 0 else -1
        if disc < 0 or root * root != disc:
            continue
        for p in ((c3 + root) // 2, (c3 - root) // 2):
            r = c3 - p
            if p + r == c3 and p * r == prod and p * s + q * r == c1:
                return False
    return True


def _divisor_pairs(n: int):
    if n == 0:
        yield (0, 0)
        return
    d = 1
    while d * d <= abs(n):
        if n % d == 0:
            for a in (d, -d):
                yield (a, n // a)
        d += 1


def _depress_quartic(g: IntPolynomial) -> tuple[Fraction, Fraction, Fraction]:
    """(p, q, r) with g(x - c3/4) = x^4 + p x^2 + q x + r."""
    c0, c1, c2, c3, _ = (Fraction(c) for c in g.coeffs)
    sh = -c3 / 4
    p = c2 + 6 * sh ** 2 + 3 * c3 * sh
    q = c1 + 2 * c2 * sh + 3 * c3 * sh ** 2 + 4 * sh ** 3
    r = c0 + c1 * sh + c2 * sh ** 2 + c3 * sh ** 3 + sh ** 4
    return p, q, r


def _real_quadratic_subfield_radicand(g: IntPolynomial) -> Optional[int]:
    """For a totally imaginary irreducible quartic: the square-free d > 1
    with Q(sqrt(d)) the real quadratic subfield, or None when the field is
    not CM.

    The unique factorization over R pairs each root with its conjugate:
    g(x - c3/4) = (x^2 + kx + m)(x^2 - kx + n) with k^2 a root of the
    resolvent cubic K^3 + 2pK^2 + (p^2-4r)K - q^2.  The subfield is
    rational-quadratic exactly when that root k^2 is rational.
    """
    p, q, r = _depress_quartic(g)
    cubic = _clear_denominators([
        -q * q, p * p - 4 * r, 2 * p, Fraction(1),
    ])
    for k0 in rational_roots(cubic):
        if k0 > 0:
            rad = k0.numerator * k0.denominator
            d = _square_free_kernel(rad)
            if d == 1:
                # k rational would make g reducible over Q
                continue
            return d
        if k0 == 0 and q == 0:
            disc = p * p - 4 * r
            if disc > 0:
                rad = disc.numerator * disc.denominator
                d = _square_free_kernel(rad)
                if d > 1:
                    return d
    return None


def _clear_denominators(coeffs: list[Fraction]) -> IntPolynomial:
    den = math.lcm(*(c.denominator for c in coeffs))
    return IntPolynomial([int(c * den) for c in coeffs])


@dataclass(frozen=True)
class CMElement:
    """Element of a CM field in the power basis of the defining root."""

    field: CMFieldDesc
    coords: tuple[Fraction, Fraction, Fraction, Fraction]

    def __init__(self, field: CMFieldDesc, coords):
        cs = tuple(Fraction(c) for c in coords)
        if len(cs) != 4:
            raise ValueError("four power-basis coordinates required")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", cs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


def _multiplication_matrix(x: CMElement):
    """Matrix of multiplication by x on the power basis 1, th, th^2, th^3."""
    g = x.field.defining_poly
    cols = []
    for j in range(4):
        # x * th^j reduced mod g
        col = [Fraction(0)] * 8
        for i, c in enumerate(x.coords):
            col[i + j] += c
        for k in range(7, 3, -1):
            c = col[k]
            if c:
                col[k] = Fraction(0)
                for i, m in enumerate(g.coeffs[:-1]):
                    col[k - 4 + i] -= c * m
        cols.append(col[:4])
    return tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))


def cm_char_poly(x: CMElement) -> CharPolyQuartic:
    """The norm form N(t - x): the characteristic polynomial of the
    multiplication-by-x matrix; integral exactly for elements of an order."""
    coeffs = charpoly_frac(_multiplication_matrix(x))
    if any(c.denominator != 1 for c in coeffs):
        raise NonIntegralError(
            f"norm form of {x.coords} has non-integer coefficients"
        )
    return CharPolyQuartic(IntPolynomial([int(c) for c in coeffs]))


def cm_fix(x: CMElement, n: int) -> int:
    from .endomorphisms import fix_count_quartic

    return fix_count_quartic(cm_char_poly(x).poly, n)


def cm_classify(x: CMElement) -> "_behavior.BehaviorReport":
    """B2 iff |sigma(x)| = 1 (structurally: the norm form is a product of
    cyclotomics); B1 otherwise; never B3."""
    if x.is_zero():
        raise ZeroEndomorphismError("zero CM element")
    report = _behavior.classify(cm_char_poly(x))
    if report.verdict == _behavior.B3:
        raise InvalidEndomorphismError(
            "mixed behaviour from a CM element contradicts the field structure"
        )
    return report


# -- periodic eigenvalue tables -------------------------------------------------


def periodic_eigenvalue_table(kind: str) -> list[IntPolynomial]:
    """Minimal polynomials of all eigenvalues that periodic endomorphisms
    can have: roots of unity of algebraic degree <= 2 (quaternion) or <= 4
    (CM)."""
    quaternion = [cyclotomic(k) for k in (1, 2, 3, 4, 6)]
    if kind == "quaternion":
        return quaternion
    if kind == "cm":
        return quaternion + [cyclotomic(k) for k in (5, 8, 10, 12)]
    raise ValueError(f"kind must be 'quaternion' or 'cm', got {kind!r}")


# -- families and builtin examples ----------------------------------------------


def mcmullen_family(a: int) -> CharPolyQuartic:
    """t^4 + a t^2 + t + 1, realizable as a rational char poly for a >= 0."""
    if a < 0:
        raise ValueError("parameter must be a nonnegative integer")
    return CharPolyQuartic(IntPolynomial((1, 1, a, 0, 1)))


def _min_modulus_sq_below(w: IntPolynomial, e: Fraction) -> bool:
    """Exact test min |root|^2 < e for a monic integer quartic with no real
    roots, no zero roots and no unit-circle roots."""
    ws = square_free_part(w)
    if ws.degree == 2:
        return Fraction(ws.coeffs[0], ws.coeffs[2]) < e
    assert ws.degree == 4
    c0 = Fraction(ws.coeffs[0])
    res = _resolvent_cubic(ws)
    # V(y) = y^2 - u* y + c0 has roots m1^2 <= m2^2; sign(V(e)) for e > 0
    # is the sign of (e^2 + c0)/e - u*.
    cmp_v = _max_real_root_exceeds(res, (e * e + c0) / e)
    if cmp_v > 0:
        return True  # V(e) < 0: e lies between the two moduli squared
    if cmp_v == 0:
        return False  # e equals one of the moduli squared
    # same side of both roots: below both iff u* >= 2e
    return _max_real_root_exceeds(res, 2 * e) < 0


def find_small_eigenvalue_parameter(eps: Fraction) -> int:
    """Least a >= 0 such that t^4 + a t^2 + t + 1 has a root of modulus
    < eps.  The small conjugate pair has |root|^2 ~ 1/a, so this terminates."""
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise ValueError("eps must lie in (0, 1]")
    e = eps * eps
    for a in count(0):
        if _min_modulus_sq_below(mcmullen_family(a).poly, e):
            return a


def sl2_family(a: int, b: int, c: int, d: int) -> AnalyticRep:
    """The automorphism of E x E given by an SL_2(Z) matrix; its analytic
    char poly is t^2 - (a+d) t + 1."""
    if a * d - b * c != 1:
        raise ValueError("matrix must be unimodular (determinant 1)")
    return AnalyticRep(1, [[a, b], [c, d]])


def builtin_examples() -> dict:
    """Named inputs used throughout the literature's worked examples."""
    return {
        "rotation_e_times_e": AnalyticRep(1, [[1, -1], [1, 0]]),
        "gaussian_i_2i": AnalyticRep(-1, [[(0, 1), 0], [0, (0, 2)]]),
        "rm_sqrt2": RealQuadElement(d=2, a=-1, b=1),
        "mcmullen_0": mcmullen_family(0),
        "neg_identity": RationalRep([[-1 if i == j else 0 for j in range(4)] for i in range(4)]),
        "mult_2": RationalRep([[2 if i == j else 0 for j in range(4)] for i in range(4)]),
    }
