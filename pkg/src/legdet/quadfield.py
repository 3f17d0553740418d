"""Invariants of Q(sqrt p): fundamental unit, class numbers, and unit powers.

Units are kept as ``(two_a + two_b*sqrt(p)) / 2`` with integer ``two_a``,
``two_b`` of equal parity, which covers the half-integral units that occur
for p = 1 (mod 4).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime, jacobi


class ClassNumberMismatch(ArithmeticError):
    """The analytic and form-counting class numbers disagree."""


class PrecisionError(ArithmeticError):
    """A floating cross-check could not be evaluated reliably."""


@dataclass(frozen=True)
class QuadInt:
    two_a: int
    two_b: int
    p: int

    def __post_init__(self):
        if (self.two_a - self.two_b) % 2:
            raise ValueError(f"parity mismatch in {self}")

    @property
    def a(self) -> Fraction:
        return Fraction(self.two_a, 2)

    @property
    def b(self) -> Fraction:
        return Fraction(self.two_b, 2)

    def norm4(self) -> int:
        """Four times the field norm."""
        return self.two_a**2 - self.p * self.two_b**2

    def __mul__(self, other: QuadInt) -> QuadInt:
        if other.p != self.p:
            raise ValueError("different radicands")
        ta = self.two_a * other.two_a + self.p * self.two_b * other.two_b
        tb = self.two_a * other.two_b + self.two_b * other.two_a
        assert ta % 2 == 0 and tb % 2 == 0
        return QuadInt(ta // 2, tb // 2, self.p)

    def __float__(self) -> float:
        return (self.two_a + self.two_b * math.sqrt(self.p)) / 2


@dataclass(frozen=True)
class QuadInvariants:
    p: int
    eps: QuadInt
    h_plus: int
    h_minus: int
    ab: QuadInt
    ab_prime: QuadInt

    @property
    def a(self) -> Fraction:
        return self.ab.a

    @property
    def b(self) -> Fraction:
        return self.ab.b

    @property
    def a_prime(self) -> Fraction:
        return self.ab_prime.a

    @property
    def b_prime(self) -> Fraction:
        return self.ab_prime.b


def _check_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"need an odd prime, got {p}")


def _cf_convergents(p0: int, q0: int, d: int):
    """Convergents h/k of (p0 + sqrt d)/q0, needing q0 | d - p0^2."""
    s = math.isqrt(d)
    pp, qq = p0, q0
    h1, h2, k1, k2 = 1, 0, 0, 1
    while True:
        a = (pp + s) // qq
        h1, h2 = a * h1 + h2, h1
        k1, k2 = a * k1 + k2, k1
        yield h1, k1
        pp = a * qq - pp
        qq = (d - pp * pp) // qq


def fundamental_unit(p: int) -> QuadInt:
    """Least unit > 1 of the maximal order of Q(sqrt p), via continued fractions."""
    _check_odd_prime(p)
    if p % 4 == 1:
        # (2h - k)/k approximates sqrt p when h/k approximates (1 + sqrt p)/2.
        for h, k in _cf_convergents(1, 2, p):
            t = 2 * h - k
            if t * t - p * k * k in (4, -4):
                return QuadInt(t, k, p)
    for h, k in _cf_convergents(0, 1, p):
        if h * h - p * k * k in (1, -1):
            return QuadInt(2 * h, 2 * k, p)
    raise AssertionError("unreachable")


def fundamental_unit_search(p: int, max_u: int = 10**6) -> QuadInt | None:
    """Minimal-u search over t^2 - p u^2 = +-4; slow, used as an oracle."""
    for u in range(1, max_u + 1):
        for sign in (-4, 4):
            t2 = p * u * u + sign
            t = math.isqrt(t2) if t2 > 0 else -1
            if t > 0 and t * t == t2:
                return QuadInt(t, u, p)
    return None


def pow_unit(u: QuadInt, e: int) -> QuadInt:
    if e < 0:
        raise ValueError("negative exponent")
    result, base = QuadInt(2, 0, u.p), u
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


def discriminant(p: int) -> int:
    return p if p % 4 == 1 else 4 * p


def _kronecker_real(p: int, a: int) -> int:
    # Character of Q(sqrt p) evaluated at 0 < a < discriminant.
    if p % 4 == 1:
        return jacobi(a, p)
    return 0 if a % 2 == 0 else jacobi(p, a)


def class_number_real_analytic(p: int, eps: QuadInt | None = None) -> int:
    """h(p) from h log(eps) = -1/2 sum chi(a) log sin(pi a / D)."""
    _check_odd_prime(p)
    eps = eps or fundamental_unit(p)
    d = discriminant(p)
    total = -0.5 * math.fsum(
        _kronecker_real(p, a) * math.log(math.sin(math.pi * a / d)) for a in range(1, d)
    )
    log_eps = math.log(float(eps))
    h = total / log_eps
    if abs(h - round(h)) > 1e-6:
        raise ClassNumberMismatch(f"analytic class number of {p} not near an integer: {h}")
    return round(h)


def _reduced_indefinite_forms(d: int) -> list[tuple[int, int, int]]:
    s = math.isqrt(d)
    forms = []
    for b in range(1, s + 1):
        if (b - d) % 2 or b * b >= d:
            continue
        ac = (b * b - d) // 4
        for a_abs in range(1, -ac + 1):
            if -ac % a_abs:
                continue
            # sqrt(d) - b < 2|a| < sqrt(d) + b
            lo_ok = (2 * a_abs + b) ** 2 > d
            hi_ok = 2 * a_abs <= b or (2 * a_abs - b) ** 2 < d
            if not (lo_ok and hi_ok):
                continue
            for a in (a_abs, -a_abs):
                c = ac // a
                if math.gcd(math.gcd(a, b), c) == 1:
                    forms.append((a, b, c))
    return forms


def _rho(form: tuple[int, int, int], d: int) -> tuple[int, int, int]:
    a, b, c = form
    s = math.isqrt(d)
    m = 2 * abs(c)
    if abs(c) <= s:
        # largest r < sqrt(d) with r = -b (mod 2|c|)
        r = s - (s + b) % m
    else:
        r = (-b) % m
        if r > abs(c):
            r -= m
    return c, r, (r * r - d) // (4 * c)


def narrow_class_number_forms(d: int) -> int:
    """Number of cycles of reduced primitive indefinite forms of discriminant d."""
    forms = set(_reduced_indefinite_forms(d))
    cycles = 0
    while forms:
        start = forms.pop()
        cycles += 1
        f = _rho(start, d)
        while f != start:
            forms.discard(f)
            f = _rho(f, d)
    return cycles


def class_number_real_forms(p: int) -> int:
    """h(p) from cycles of reduced forms; halved when the unit has norm +1."""
    _check_odd_prime(p)
    h_narrow = narrow_class_number_forms(discriminant(p))
    return h_narrow if fundamental_unit(p).norm4() < 0 else h_narrow // 2


def class_number_real(p: int) -> int:
    """h(p); the analytic formula and the form count must agree."""
    eps = fundamental_unit(p)
    analytic = class_number_real_analytic(p, eps)
    counted = class_number_real_forms(p)
    if analytic != counted:
        raise ClassNumberMismatch(f"h({p}): analytic {analytic} != forms {counted}")
    return analytic


def class_number_imag(p: int) -> int:
    """h(-p) for primes p = 3 (mod 4), p > 3, by the half-range character sum."""
    if p % 4 != 3 or p == 3 or not is_prime(p):
        raise ValueError(f"need a prime p = 3 (mod 4), p > 3; got {p}")
    s = sum(jacobi(k, p) for k in range(1, (p - 1) // 2 + 1))
    h, rem = divmod(s, 2 - jacobi(2, p))
    if rem or h <= 0:
        raise ArithmeticError(f"character sum for h(-{p}) is not a positive multiple")
    return h


def count_reduced_definite_forms(d: int) -> int:
    """Primitive reduced positive definite forms of discriminant d < 0."""
    count = 0
    a = 1
    while 3 * a * a <= -d:
        for b in range(-a + 1, a + 1):
            if (b * b - d) % (4 * a):
                continue
            c = (b * b - d) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if math.gcd(math.gcd(a, b), c) == 1:
                count += 1
        a += 1
    return count


_memo: dict[int, QuadInvariants] = {}


def invariants(p: int) -> QuadInvariants:
    """All invariants for p, memoized per process."""
    cached = _memo.get(p)
    if cached is not None:
        return cached
    _check_odd_prime(p)
    eps = fundamental_unit(p)
    h = class_number_real(p)
    if p % 4 == 3:
        h_minus = class_number_imag(p) if p > 3 else count_reduced_definite_forms(-3)
    else:
        h_minus = 0
    inv = QuadInvariants(
        p=p,
        eps=eps,
        h_plus=h,
        h_minus=h_minus,
        ab=pow_unit(eps, h),
        ab_prime=pow_unit(eps, (2 - jacobi(2, p)) * h),
    )
    _memo[p] = inv
    return inv


def seed_memo(records: dict[int, QuadInvariants]) -> None:
    _memo.update(records)


def dirichlet_crosscheck(p: int, a: int, h: int | None = None) -> bool:
    """Compare prod_{k<=(p-1)/2} (1 - e(a k^2/p)) with sqrt(p) eps^(-(a/p) h).

    ``h`` overrides the class number (for negative controls).
    """
    if p % 4 != 1 or not is_prime(p):
        raise ValueError(f"need a prime p = 1 (mod 4), got {p}")
    if a % p == 0:
        raise ValueError("a must be prime to p")
    inv = invariants(p)
    h = inv.h_plus if h is None else h
    lhs = complex(1.0)
    for k in range(1, (p - 1) // 2 + 1):
        lhs *= 1 - cmath.exp(2j * math.pi * a * k * k / p)
    try:
        rhs = math.sqrt(p) * float(inv.eps) ** (-jacobi(a, p) * h)
    except OverflowError as exc:
        raise PrecisionError(f"eps_{p}^{h} overflows a double") from exc
    if not (math.isfinite(lhs.real) and math.isfinite(rhs)) or rhs == 0.0:
        raise PrecisionError(f"cross-check at p={p} left the double range")
    return abs(lhs - rhs) / abs(rhs) < 1e-6
