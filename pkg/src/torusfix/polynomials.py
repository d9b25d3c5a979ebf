"""Dense integer polynomials with exact arithmetic.

Coefficients are stored ascending, so ``IntPolynomial((1, -1, 1))`` is
t^2 - t + 1.  The degrees occurring in this package never exceed ~20, so
the dense representation is deliberate.  Serialization format (shared by
the CLI and test fixtures): comma-separated ascending coefficients,
e.g. ``"1,-1,1"``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Optional

from .intervals import RationalInterval

BigRational = Fraction


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, ascending coefficients, trailing zeros trimmed."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {c!r}")
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- basics ----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return not self.is_zero() and self.leading == 1

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPolynomial([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial([c * a for a in self.coeffs])

    def shift_degree(self, k: int) -> "IntPolynomial":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        if self.is_zero():
            return 0
        g = reduce(math.gcd, (abs(c) for c in self.coeffs))
        return g if self.leading > 0 else -g

    def primitive(self) -> "IntPolynomial":
        """Divide out the content; result has positive leading coefficient."""
        if self.is_zero():
            return self
        c = self.content()
        return IntPolynomial([a // c for a in self.coeffs])

    def trailing_zero_count(self) -> int:
        """Multiplicity of the root 0."""
        if self.is_zero():
            raise ValueError("zero polynomial")
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k

    def __str__(self) -> str:
        return serialize_poly(self)

    # -- division --------------------------------------------------------

    def divmod_rational(self, other: "IntPolynomial"):
        """Quotient and remainder over the rationals, as Fraction lists."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        div = [Fraction(c) for c in other.coeffs]
        dq = len(rem) - len(div)
        if dq < 0:
            return [], rem
        quo = [Fraction(0)] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + len(div) - 1] / div[-1]
            quo[k] = c
            if c:
                for j, d in enumerate(div):
                    rem[k + j] -= c * d
        while rem and rem[-1] == 0:
            rem.pop()
        return quo, rem

    def divexact(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact division; raises ValueError if the remainder is non-zero
        or the quotient is not integral."""
        quo, rem = self.divmod_rational(other)
        if rem:
            raise ValueError(f"{other} does not divide {self}")
        if any(q.denominator != 1 for q in quo):
            raise ValueError(f"quotient of {self} by {other} is not integral")
        return IntPolynomial([int(q) for q in quo])

    def divides(self, other: "IntPolynomial") -> bool:
        """True iff self divides other over the rationals."""
        _, rem = other.divmod_rational(self)
        return not rem


ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))
T = IntPolynomial((0, 1))


def monomial(coeffs) -> IntPolynomial:
    return IntPolynomial(coeffs)


# -- serialization ---------------------------------------------------------


def serialize_poly(p: IntPolynomial) -> str:
    if p.is_zero():
        return "0"
    return ",".join(str(c) for c in p.coeffs)


def parse_poly(text: str) -> IntPolynomial:
    try:
        return IntPolynomial([int(part.strip()) for part in text.split(",")])
    except ValueError as exc:
        raise ValueError(f"malformed polynomial string {text!r}") from exc


# -- core operations --------------------------------------------------------


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def poly_reverse(p: IntPolynomial) -> IntPolynomial:
    """t^deg(p) * p(1/t): the reversed coefficient list, trimmed."""
    if p.is_zero():
        raise ValueError("cannot reverse the zero polynomial")
    return IntPolynomial(tuple(reversed(p.coeffs)))


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Q, positive leading coefficient."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials")
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in q.coeffs]

    def frac_rem(x, y):
        x = list(x)
        while len(x) >= len(y):
            c = x[-1] / y[-1]
            k = len(x) - len(y)
            for j, d in enumerate(y):
                x[k + j] -= c * d
            while x and x[-1] == 0:
                x.pop()
            if not x:
                break
        return x

    while b:
        a, b = b, frac_rem(a, b)
    # clear denominators, primitivize
    den = reduce(math.lcm, (c.denominator for c in a), 1)
    return IntPolynomial([int(c * den) for c in a]).primitive()


def resultant(p: IntPolynomial, q: IntPolynomial) -> int:
    """Res(p, q), exact, via fraction-free (Bareiss) elimination of the
    Sylvester matrix.  For monic p this equals prod q(root_i of p)."""
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant requires non-zero polynomials")
    m, n = p.degree, q.degree
    if m == 0:
        return p.coeffs[0] ** n
    if n == 0:
        return q.coeffs[0] ** m
    size = m + n
    # Sylvester matrix, descending coefficients per convention.
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    mat = [[0] * size for _ in range(size)]
    for i in range(n):
        for j, c in enumerate(pc):
            mat[i][i + j] = c
    for i in range(m):
        for j, c in enumerate(qc):
            mat[n + i][i + j] = c
    return _bareiss_det(mat)


def _bareiss_det(mat: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix (destructive)."""
    n = len(mat)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for r in range(k + 1, n):
                if mat[r][k] != 0:
                    mat[k], mat[r] = mat[r], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[n - 1][n - 1]


_CYCLOTOMIC_TABLE = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    5: (1, 1, 1, 1, 1),
    6: (1, -1, 1),
    7: (1, 1, 1, 1, 1, 1, 1),
    8: (1, 0, 0, 0, 1),
    9: (1, 0, 0, 1, 0, 0, 1),
    10: (1, -1, 1, -1, 1),
    11: (1,) * 11,
    12: (1, 0, -1, 0, 1),
}

# Orders whose roots of unity have algebraic degree <= 4; the only ones a
# quartic rational characteristic polynomial can carry.
ALLOWED_UNITY_ORDERS = (1, 2, 3, 4, 5, 6, 8, 10, 12)


def cyclotomic(k: int) -> IntPolynomial:
    """The k-th cyclotomic polynomial, 1 <= k <= 12."""
    if k not in _CYCLOTOMIC_TABLE:
        raise ValueError(f"cyclotomic order {k} outside supported range 1..12")
    return IntPolynomial(_CYCLOTOMIC_TABLE[k])


def euler_phi(k: int) -> int:
    return len(_CYCLOTOMIC_TABLE[k]) - 1


# -- real root machinery -----------------------------------------------------


def cauchy_bound(p: IntPolynomial) -> Fraction:
    """All real roots of p lie strictly inside (-B, B)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    lead = abs(p.leading)
    return 1 + max(Fraction(abs(c), lead) for c in p.coeffs)


def _exact_quotient_primitive(p: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    quo, rem = p.divmod_rational(g)
    assert not rem, "exact quotient expected"
    den = reduce(math.lcm, (c.denominator for c in quo), 1)
    return IntPolynomial([int(c * den) for c in quo]).primitive()


@lru_cache(maxsize=4096)
def square_free_part(p: IntPolynomial) -> IntPolynomial:
    """p divided by gcd(p, p'), primitive with positive leading coefficient."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return ONE
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    return _exact_quotient_primitive(p, g)


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """[(f_i, i)] with p ~ prod f_i^i, each f_i primitive square-free,
    pairwise coprime; unit factors dropped.

    Uses the gcd-chain scheme: s_i := square-free part of p / (s_1...s_{i-1})
    collects the factors of multiplicity >= i, and f_i = s_i / s_{i+1}.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    cur = p.primitive()
    if cur.degree <= 0:
        return []
    levels: list[IntPolynomial] = []
    while cur.degree > 0:
        s = square_free_part(cur)
        levels.append(s)
        cur = _exact_quotient_primitive(cur, s)
    out: list[tuple[IntPolynomial, int]] = []
    for i, s in enumerate(levels):
        nxt = levels[i + 1] if i + 1 < len(levels) else ONE
        f = _exact_quotient_primitive(s, nxt)
        if f.degree > 0:
            out.append((f, i + 1))
    return out


@lru_cache(maxsize=4096)
def sturm_chain(p: IntPolynomial) -> list[IntPolynomial]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        _, rem = chain[-2].divmod_rational(chain[-1])
        if not rem:
            break
        den = reduce(math.lcm, (c.denominator for c in rem), 1)
        raw = [int(-c * den) for c in rem]
        g = reduce(math.gcd, (abs(c) for c in raw))
        chain.append(IntPolynomial([c // g for c in raw]))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _sign_variations(chain: list[IntPolynomial], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = q(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: IntPolynomial, interval: RationalInterval) -> int:
    """Distinct real roots of square-free p in (lo, hi]."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p(interval.lo) == 0 or p(interval.hi) == 0:
        raise ValueError("interval endpoint is a root; divide it out first")
    chain = sturm_chain(p)
    return _sign_variations(chain, interval.lo) - _sign_variations(chain, interval.hi)


def count_real_roots(p: IntPolynomial) -> int:
    """Distinct real roots of square-free p."""
    if p.degree <= 0:
        return 0
    b = cauchy_bound(p)
    return sturm_count(p, RationalInterval(-b, b))


def real_root_isolation(p: IntPolynomial) -> list[RationalInterval]:
    """Disjoint intervals each containing exactly one distinct real root of p.

    Rational roots are returned as degenerate point intervals; irrational
    roots as (lo, hi] brackets with a sign change of the square-free part.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    w = square_free_part(p)
    if w.degree <= 0:
        return []
    rationals = rational_roots(w)
    out: list[RationalInterval] = [RationalInterval.point(r) for r in rationals]
    for r in rationals:
        w = w.divexact(IntPolynomial((-r.numerator, r.denominator)))
    if w.degree > 0:
        chain = sturm_chain(w)
        b = cauchy_bound(w)
        stack = [(-b, b)]
        while stack:
            lo, hi = stack.pop()
            n = _sign_variations(chain, lo) - _sign_variations(chain, hi)
            if n == 0:
                continue
            if n == 1 and w(lo) * w(hi) < 0:
                iv = RationalInterval(lo, hi)
                # shrink until no rational root of p sits inside the bracket
                while any(iv.lo <= r <= iv.hi for r in rationals):
                    iv = refine_root(w, iv, iv.width / 4)
                out.append(iv)
                continue
            mid = (lo + hi) / 2
            while w(mid) == 0:  # irrational roots: perturb off the midpoint
                mid = (lo + mid) / 2
            stack.append((lo, mid))
            stack.append((mid, hi))
    out.sort(key=lambda iv: iv.lo)
    return out


def refine_root(p: IntPolynomial, interval: RationalInterval,
                width: Fraction = Fraction(1, 2 ** 32)) -> RationalInterval:
    """Bisect an isolating interval of p down to the requested width."""
    if interval.lo == interval.hi:
        return interval
    w = square_free_part(p)
    lo, hi = interval.lo, interval.hi
    slo = w(lo)
    shi = w(hi)
    if slo == 0 or shi == 0 or slo * shi > 0:
        raise ValueError("not a sign-change isolating interval")
    while hi - lo > width:
        mid = (lo + hi) / 2
        v = w(mid)
        if v == 0:
            return RationalInterval.point(mid)
        if (v > 0) == (slo > 0):
            lo = mid
        else:
            hi = mid
    return RationalInterval(lo, hi)


def rational_roots(p: IntPolynomial) -> list[Fraction]:
    """All rational roots (distinct) of a non-zero integer polynomial."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    k = p.trailing_zero_count()
    roots = [Fraction(0)] if k else []
    q = IntPolynomial(p.coeffs[k:])
    if q.degree == 0:
        return roots
    a0, an = abs(q.coeffs[0]), abs(q.leading)
    for num in _divisors(a0):
        for den in _divisors(an):
            for s in (1, -1):
                cand = Fraction(s * num, den)
                if q(cand) == 0 and cand not in roots:
                    roots.append(cand)
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def is_square_rational(q: Fraction) -> Optional[Fraction]:
    """Exact positive square root of a rational square, else None."""
    q = Fraction(q)
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def power_mod(base: IntPolynomial, n: int, modulus: IntPolynomial) -> IntPolynomial:
    """base^n mod modulus for monic integer modulus (exact reduction)."""
    if not modulus.is_monic():
        raise ValueError("modulus must be monic")

    def red(f: IntPolynomial) -> IntPolynomial:
        cs = list(f.coeffs)
        d = modulus.degree
        while len(cs) > d:
            c = cs.pop()
            if c:
                for j, m in enumerate(modulus.coeffs[:-1]):
                    cs[len(cs) - d + j] -= c * m
        return IntPolynomial(cs)

    result = ONE
    base = red(base)
    while n:
        if n & 1:
            result = red(result * base)
        base = red(base * base)
        n >>= 1
    return result
