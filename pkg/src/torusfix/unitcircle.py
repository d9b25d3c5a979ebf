"""Exact classification of quartic roots relative to the unit circle.

Roots on the circle are detected structurally (gcd with the reversed
polynomial, then the u = t + 1/t substitution); no floating point is
involved anywhere, since no tolerance can distinguish |mu| = 1 from
|mu| = 1 +- eps for an integer polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Callable, Optional

from .errors import InvalidEndomorphismError, InvalidStructureError
from .intervals import RationalInterval, sqrt_interval
from .polynomials import (
    ALLOWED_UNITY_ORDERS,
    IntPolynomial,
    ONE,
    cauchy_bound,
    count_real_roots,
    cyclotomic,
    euler_phi,
    poly_gcd,
    poly_reverse,
    rational_roots,
    real_root_isolation,
    refine_root,
    square_free_part,
    squarefree_decomposition,
    sturm_count,
)

DEFAULT_ENCLOSURE_WIDTH = Fraction(1, 2 ** 20)


@dataclass(frozen=True)
class CharPolyQuartic:
    """Monic integer quartic; the characteristic polynomial of the
    rational representation of a torus endomorphism candidate."""

    poly: IntPolynomial

    def __post_init__(self):
        if self.poly.degree != 4:
            raise InvalidStructureError(f"degree 4 required, got {self.poly.degree}")
        if not self.poly.is_monic():
            raise InvalidStructureError("monic polynomial required")

    def __str__(self) -> str:
        return str(self.poly)


@dataclass(frozen=True)
class EigenvalueClassification:
    """Exact census of the four quartic roots by modulus."""

    n_zero: int
    n_less: int
    n_on: int
    n_more: int
    unity_orders: tuple[int, ...]
    outside_moduli: tuple[RationalInterval, ...]

    def __post_init__(self):
        if self.n_zero + self.n_less + self.n_on + self.n_more != 4:
            raise ValueError("root counts must sum to 4")
        for k in self.unity_orders:
            if k not in ALLOWED_UNITY_ORDERS:
                raise ValueError(f"unity order {k} outside the allowed set")


def validate_conjugate_pair_structure(P: CharPolyQuartic) -> bool:
    """True iff the roots can be written {l1, l2, conj l1, conj l2}:
    equivalently, every real root has even multiplicity."""
    for factor, mult in squarefree_decomposition(P.poly):
        if mult % 2 == 1 and count_real_roots(factor) > 0:
            return False
    return True


def _strip_pm_one(p: IntPolynomial) -> tuple[IntPolynomial, int, int]:
    """Divide out all (t-1) and (t+1) factors; returns (rest, mult1, mult_neg1)."""
    m1 = 0
    while p(1) == 0:
        p = p.divexact(IntPolynomial((-1, 1)))
        m1 += 1
    m2 = 0
    while p(-1) == 0:
        p = p.divexact(IntPolynomial((1, 1)))
        m2 += 1
    return p, m1, m2


def _chebyshev_like(n: int) -> IntPolynomial:
    """c_n(u) with c_n(t + 1/t) = t^n + t^-n: c_0=2, c_1=u, c_n = u*c_{n-1} - c_{n-2}."""
    a, b = IntPolynomial((2,)), IntPolynomial((0, 1))
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, IntPolynomial((0, 1)) * b - a
    return b


def _self_inversive_to_u(g: IntPolynomial) -> IntPolynomial:
    """For self-reciprocal g of even degree 2k, the h with g(t) = t^k h(t+1/t)."""
    if poly_reverse(g) != g:
        raise ValueError("not self-reciprocal")
    if g.degree % 2 != 0:
        raise ValueError("even degree required")
    k = g.degree // 2
    h = IntPolynomial((g.coeffs[k],))
    for j in range(1, k + 1):
        h = h + _chebyshev_like(j).scale(g.coeffs[k + j])
    return h


def _quadratic_from_u_root(u: Fraction) -> IntPolynomial:
    """Primitive integer quadratic with roots t where t + 1/t = u."""
    den = u.denominator
    return IntPolynomial((den, -u.numerator, den))


def unit_circle_factor(P: CharPolyQuartic) -> IntPolynomial:
    """The exact monic integer factor of P carrying precisely the
    unit-circle roots, with multiplicity."""
    p = P.poly
    nz = p.trailing_zero_count()
    p = IntPolynomial(p.coeffs[nz:])
    p, m_one, m_neg = _strip_pm_one(p)
    factor = _power(IntPolynomial((-1, 1)), m_one) * _power(IntPolynomial((1, 1)), m_neg)
    if p.degree == 0:
        return factor
    g = poly_gcd(p, poly_reverse(p))
    # make multiplicities of g match those in p (gcd may over/undercount only
    # via reversal symmetry; min() is already right, but keep g | p exact)
    if g.degree == 0:
        return factor
    if poly_reverse(g) != g:
        # +-1 roots were stripped, so the gcd must be genuinely self-reciprocal
        raise InvalidEndomorphismError("reciprocal factor is not self-reciprocal")
    for h_factor, mult in squarefree_decomposition(g):
        if poly_reverse(h_factor) != h_factor:
            # factor paired with its distinct reverse: roots off the circle
            continue
        h = _self_inversive_to_u(h_factor)
        if h.degree == 1:
            u0 = Fraction(-h.coeffs[0], h.coeffs[1])
            if -2 <= u0 <= 2:
                quad = _quadratic_from_u_root(u0)
                factor = factor * _power(quad, _multiplicity(P.poly, quad))
        elif h.degree == 2:
            inside = _count_u_roots_in_closed_2(h)
            if inside == 2:
                factor = factor * _power(h_factor, _multiplicity(P.poly, h_factor))
            elif inside == 1:
                # circle pair entangled with a real reciprocal pair (Salem-type);
                # the circle factor is not rational
                raise InvalidStructureError(
                    "unit-circle roots do not form a rational factor"
                )
        # h.degree == 0 cannot occur for deg h_factor >= 2
    return factor


def _count_u_roots_in_closed_2(h: IntPolynomial) -> int:
    """Distinct real roots of square-free h in [-2, 2]."""
    count = 0
    hh = square_free_part(h)
    for end in (-2, 2):
        if hh(end) == 0:
            count += 1
            hh = hh.divexact(IntPolynomial((-end, 1)))
    if hh.degree > 0:
        count += sturm_count(hh, RationalInterval(Fraction(-2), Fraction(2)))
    return count


def _multiplicity(p: IntPolynomial, factor: IntPolynomial) -> int:
    m = 0
    while factor.divides(p):
        p = _exact_quotient(p, factor)
        m += 1
    return m


def _exact_quotient(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    quo, rem = p.divmod_rational(q)
    assert not rem
    lcm = reduce(math.lcm, (c.denominator for c in quo), 1)
    out = IntPolynomial([int(c * lcm) for c in quo])
    assert lcm == 1
    return out


def _power(p: IntPolynomial, k: int) -> IntPolynomial:
    out = ONE
    for _ in range(k):
        out = out * p
    return out


def root_of_unity_order(q: IntPolynomial) -> Optional[int]:
    """If q is a product of cyclotomics of order <= 12, the lcm of the
    orders; otherwise None."""
    if q.is_zero() or not q.is_monic() or q.degree < 1:
        raise ValueError("monic integer polynomial of degree >= 1 required")
    orders = []
    for k in ALLOWED_UNITY_ORDERS:
        phi_k = cyclotomic(k)
        while phi_k.divides(q):
            q = q.divexact(phi_k)
            orders.append(k)
            if q.degree == 0:
                break
        if q.degree == 0:
            break
    if q.degree != 0 or not orders:
        return None
    return math.lcm(*orders)


def cyclotomic_orders_with_multiplicity(q: IntPolynomial) -> Optional[list[int]]:
    """Per-root unity orders of a cyclotomic-product polynomial: Phi_6^2
    contributes four entries of 6.  None if q is not such a product."""
    if q.degree == 0:
        return []
    orders: list[int] = []
    for k in ALLOWED_UNITY_ORDERS:
        phi_k = cyclotomic(k)
        while phi_k.divides(q):
            q = q.divexact(phi_k)
            orders.extend([k] * euler_phi(k))
            if q.degree == 0:
                break
        if q.degree == 0:
            break
    if q.degree != 0:
        return None
    return sorted(orders)


def assert_self_reciprocal_minpoly(h: IntPolynomial) -> bool:
    """True iff deg h is even and t^n h(1/t) = h(t)."""
    if h.is_zero() or not h.is_monic():
        raise ValueError("monic integer polynomial required")
    return h.degree % 2 == 0 and poly_reverse(h) == h


# -- off-circle root groups ---------------------------------------------------


@dataclass
class _RootGroup:
    """A set of quartic roots sharing one modulus, counted with multiplicity.

    ``modulus_sq`` produces an exact rational enclosure of |mu|^2 at any
    requested width.
    """

    count: int
    outside: bool  # |mu| > 1 (roots on the circle never form groups)
    modulus_sq: Callable[[Fraction], RationalInterval]


def _resolvent_cubic(w: IntPolynomial) -> IntPolynomial:
    """For monic quartic t^4+c3 t^3+c2 t^2+c1 t+c0: the cubic with roots
    r1r2+r3r4, r1r3+r2r4, r1r4+r2r3."""
    c0, c1, c2, c3, _ = w.coeffs
    return IntPolynomial((
        -(c1 * c1 + c0 * c3 * c3 - 4 * c0 * c2),
        c1 * c3 - 4 * c0,
        -c2,
        1,
    ))


def _max_real_root_exceeds(r: IntPolynomial, q: Fraction) -> int:
    """Sign of (max real root of r) - q for a cubic r: +1, 0 or -1."""
    rs = square_free_part(r)
    if rs(q) == 0:
        quot = rs.divexact(IntPolynomial((-q.numerator, q.denominator)))
        above = 0
        if quot.degree > 0:
            above = sturm_count(quot, RationalInterval(q, cauchy_bound(rs) + 1))
        return 1 if above > 0 else 0
    b = cauchy_bound(rs)
    hi = max(b, abs(q) + 1)
    above = sturm_count(rs, RationalInterval(q, hi))
    return 1 if above > 0 else -1


def _max_real_root_interval(r: IntPolynomial, width: Fraction) -> RationalInterval:
    ivs = real_root_isolation(r)
    if not ivs:
        raise ValueError("cubic without real roots cannot occur")
    return refine_root(r, ivs[-1], width)


def _two_pair_groups(f: IntPolynomial, mult: int) -> list[_RootGroup]:
    """Groups for a square-free monic integer quartic with no real roots
    and no unit-circle roots: two conjugate pairs with moduli m1 <= m2.

    m1^2 + m2^2 is the largest real root u* of the resolvent cubic (the
    conjugate pairing dominates every other pairing's product sum), and
    m1^2 * m2^2 = c0.
    """
    c0 = Fraction(f.coeffs[0])
    res = _resolvent_cubic(f)

    # side determination: V(y) = y^2 - u* y + c0 has roots m1^2, m2^2;
    # V(1) = 1 - u* + c0 and the sum u* locate them w.r.t. 1.
    cmp_v1 = _max_real_root_exceeds(res, 1 + c0)  # sign of u* - (1+c0) = -sign V(1)
    if cmp_v1 == 0:
        raise InvalidEndomorphismError("unit-circle root escaped structural removal")
    if cmp_v1 > 0:
        sides = (False, True)  # m1 inside, m2 outside
    else:
        cmp_two = _max_real_root_exceeds(res, Fraction(2))
        if cmp_two > 0:
            sides = (True, True)
        else:
            sides = (False, False)  # impossible for genuine torus inputs

    # detect m1 = m2 exactly: u* = 2 sqrt(c0), i.e. u*^2 = 4 c0
    equal_moduli = False
    if is_positive_rational_square(4 * c0):
        u_eq = _sqrt_of_rational(4 * c0)
        equal_moduli = res(u_eq) == 0 and _max_real_root_exceeds(res, u_eq) == 0
    else:
        # res(2 sqrt(c0)) = 0 with sqrt(c0) irrational forces both the even
        # and the odd part of res to vanish at 4 c0, whence
        # res = (y^2 - 4 c0)(y - y_rest); then u* = 2 sqrt(c0) iff the
        # leftover root y_rest stays below it.
        r0, r1, r2, _ = (Fraction(c) for c in res.coeffs)
        if r0 + r2 * 4 * c0 == 0 and r1 + 4 * c0 == 0:
            y_rest = -r2
            equal_moduli = y_rest <= 0 or y_rest * y_rest < 4 * c0

    if equal_moduli:
        if is_positive_rational_square(c0):
            m_sq = _sqrt_of_rational(c0)

            def msq_point(width: Fraction, _v=m_sq) -> RationalInterval:
                return RationalInterval.point(_v)

            enclosure_eq = msq_point
        else:

            def enclosure_eq(width: Fraction) -> RationalInterval:
                return sqrt_interval(RationalInterval.point(c0), width)

        return [
            _RootGroup(2 * mult, sides[0], enclosure_eq),
            _RootGroup(2 * mult, sides[1], enclosure_eq),
        ]

    u_state: dict = {"iv": None}

    def _refine_u(w: Fraction) -> RationalInterval:
        if u_state["iv"] is None:
            u_state["iv"] = real_root_isolation(res)[-1]
        u_state["iv"] = refine_root(res, u_state["iv"], w)
        return u_state["iv"]

    def msq(which_larger: bool) -> Callable[[Fraction], RationalInterval]:
        def enclosure(width: Fraction) -> RationalInterval:
            w = width / 4
            while True:
                u_iv = _refine_u(w)
                disc = u_iv * u_iv + RationalInterval.point(-4 * c0)
                if disc.lo < 0 <= disc.hi:
                    w /= 4
                    continue
                root = sqrt_interval(
                    RationalInterval(max(disc.lo, Fraction(0)), disc.hi), w
                )
                m2_iv = (u_iv + root).scale(Fraction(1, 2))
                out = m2_iv if which_larger else (
                    RationalInterval.point(c0) * m2_iv.reciprocal()
                )
                if out.width <= width:
                    return out
                w /= 4

        return enclosure

    return [
        _RootGroup(2 * mult, sides[0], msq(False)),
        _RootGroup(2 * mult, sides[1], msq(True)),
    ]


def is_positive_rational_square(q: Fraction) -> bool:
    from .polynomials import is_square_rational

    return q >= 0 and is_square_rational(q) is not None


def _sqrt_of_rational(q: Fraction) -> Fraction:
    from .polynomials import is_square_rational

    r = is_square_rational(q)
    if r is None:
        raise ValueError(f"{q} is not a rational square")
    return r


def _real_root_groups(f: IntPolynomial, mult: int) -> list[_RootGroup]:
    """Groups for the real roots of a square-free factor with no roots at
    0 or on the circle (so no root at +-1)."""
    groups = []
    for iv in real_root_isolation(f):
        if iv.lo == iv.hi:
            r = iv.lo
            outside = abs(r) > 1
            groups.append(_RootGroup(
                mult, outside,
                lambda width, _v=r * r: RationalInterval.point(_v),
            ))
            continue
        # refine until the bracket excludes -1, 0 and 1
        cur = iv
        while any(cur.lo < c < cur.hi for c in (Fraction(-1), Fraction(0), Fraction(1))):
            cur = refine_root(f, cur, cur.width / 4)
            if cur.lo == cur.hi:
                break
        outside = abs(cur.midpoint()) > 1 if cur.lo == cur.hi else (
            cur.lo >= 1 or cur.hi <= -1
        )

        state = {"iv": cur}

        def msq(width: Fraction, _f=f, _state=state) -> RationalInterval:
            w = width / 4
            while True:
                _state["iv"] = refine_root(_f, _state["iv"], w)
                sq = _state["iv"] * _state["iv"]
                if sq.width <= width:
                    return sq
                w /= 4

        groups.append(_RootGroup(mult, outside, msq))
    return groups


def off_circle_groups(w: IntPolynomial) -> list[_RootGroup]:
    """Root groups of a monic integer polynomial with no roots at 0 or on
    the unit circle.  Requires the even-multiplicity real-root structure of
    a validated quartic."""
    groups: list[_RootGroup] = []
    for f, mult in squarefree_decomposition(w):
        n_real = count_real_roots(f)
        if n_real:
            if mult % 2 == 1:
                raise InvalidStructureError(
                    "real root with odd multiplicity off the circle"
                )
            groups.extend(_real_root_groups(f, mult))
        complex_deg = f.degree - n_real
        if complex_deg == 0:
            continue
        if n_real:
            # a square-free even-multiplicity factor of a quartic has
            # degree <= 2, so it cannot mix real roots and complex pairs
            raise InvalidStructureError("mixed real/complex square-free factor")
        if complex_deg == 2:
            c0 = Fraction(f.coeffs[0], f.coeffs[2])
            groups.append(_RootGroup(
                2 * mult, c0 > 1,
                lambda width, _v=c0: RationalInterval.point(_v),
            ))
        elif complex_deg == 4:
            groups.extend(_two_pair_groups(f, mult))
        else:
            raise InvalidStructureError("odd number of non-real roots")
    return groups


# -- Schur-Cohn --------------------------------------------------------------


class SchurCohnDegenerate(Exception):
    """The Schur-Cohn chain hit a vanishing constant; use the structural path."""


def schur_cohn_inside(p: IntPolynomial) -> int:
    """Number of roots of p strictly inside the unit disk, counted with
    multiplicity, for p with p(0) != 0 and no roots on the circle.
    Raises SchurCohnDegenerate when the chain cannot decide."""
    coeffs = [Fraction(c) for c in p.coeffs]
    return _schur_cohn(coeffs)


def _schur_cohn(c: list[Fraction]) -> int:
    n = len(c) - 1
    if n <= 0:
        return 0
    a0, an = c[0], c[-1]
    t = [a0 * x - an * y for x, y in zip(c, reversed(c))]
    while t and t[-1] == 0:
        t.pop()
    gamma = a0 * a0 - an * an
    if gamma == 0:
        raise SchurCohnDegenerate()
    if not t:
        raise SchurCohnDegenerate()
    if len(t) - 1 >= n:
        raise SchurCohnDegenerate()
    inner = _schur_cohn(t)
    if gamma > 0:
        # |a0| > |an|: T f dominates via a0 f on |z| = 1, equal inside counts
        return inner
    # |an| > |a0|: T f tracks -an f*, whose inside roots are the reciprocals
    # of f's outside roots
    return n - inner


# -- the census ---------------------------------------------------------------


def count_roots_by_modulus(
    P: CharPolyQuartic,
    enclosure_width: Fraction = DEFAULT_ENCLOSURE_WIDTH,
) -> EigenvalueClassification:
    """Exact modulus census of the quartic's four roots.

    Raises InvalidEndomorphismError if a unit-circle root is not a root of
    unity (impossible for genuine torus endomorphisms; certifies that P is
    not realizable).
    """
    if not validate_conjugate_pair_structure(P):
        raise InvalidStructureError(f"{P.poly} fails conjugate-pair validation")
    p = P.poly
    n_zero = p.trailing_zero_count()
    p1 = IntPolynomial(p.coeffs[n_zero:])

    circle = unit_circle_factor(CharPolyQuartic(_pad_to_quartic(p1)))
    n_on = circle.degree
    orders = cyclotomic_orders_with_multiplicity(circle) if n_on else []
    if orders is None:
        raise InvalidEndomorphismError(
            f"unit-circle factor {circle} is not a product of cyclotomics"
        )

    w = p1.divexact(circle) if n_on else p1
    if w.degree == 0:
        n_less = n_more = 0
        outside: tuple[RationalInterval, ...] = ()
    else:
        groups = off_circle_groups(w)
        n_less_struct = sum(g.count for g in groups if not g.outside)
        n_more_struct = sum(g.count for g in groups if g.outside)
        # Schur-Cohn is the primary counter; the structural groups are the
        # exact fallback (and are needed for the enclosures regardless).
        try:
            n_less = _count_inside_with_multiplicity(w)
        except SchurCohnDegenerate:
            n_less = n_less_struct
        n_more = w.degree - n_less
        assert (n_less, n_more) == (n_less_struct, n_more_struct), (
            "Schur-Cohn and structural inside-disk counts disagree"
        )
        outside = tuple(
            iv
            for g in groups
            if g.outside
            for iv in [g.modulus_sq(enclosure_width)] * g.count
        )
    return EigenvalueClassification(
        n_zero=n_zero,
        n_less=n_less,
        n_on=n_on,
        n_more=n_more,
        unity_orders=tuple(orders),
        outside_moduli=outside,
    )


def _count_inside_with_multiplicity(w: IntPolynomial) -> int:
    total = 0
    for f, mult in squarefree_decomposition(w):
        total += mult * schur_cohn_inside(f)
    return total


def _pad_to_quartic(p: IntPolynomial) -> IntPolynomial:
    """Lift a monic factor of degree <= 4 back to a quartic by multiplying
    with t^k -- only used to reuse the circle extraction on stripped input."""
    if p.degree == 4:
        return p
    return p.shift_degree(4 - p.degree)


def mahler_measure_sq_interval(
    w: IntPolynomial, width: Fraction
) -> RationalInterval:
    """Enclosure of M(w)^2 = prod over outside roots of |mu|^2, for w with
    no roots at 0 or on the circle."""
    if w.degree == 0:
        return RationalInterval.point(1)
    groups = [g for g in off_circle_groups(w) if g.outside]
    if not groups:
        return RationalInterval.point(1)
    target = width
    while True:
        out = RationalInterval.point(1)
        per_group = target / (4 * len(groups))
        for g in groups:
            out = out * g.modulus_sq(per_group).intpow(g.count)
        if out.width <= width:
            return out
        target /= 4
