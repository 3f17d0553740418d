"""Integer utilities: symbols, primality, CRT, Hadamard bounds, two squares."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class TwoSquares:
    a: int
    b: int
    n: int

    def __post_init__(self):
        if self.a * self.a + self.b * self.b != self.n or not 0 <= self.a <= self.b:
            raise ValueError(f"not a normalized two-square decomposition: {self}")


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) by the binary reciprocity algorithm.

    ``n`` must be odd and positive; ``jacobi(a, 1) == 1``.
    """
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs odd positive modulus, got {n}")
    a %= n
    t = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t if n == 1 else 0


def legendre_euler(a: int, p: int) -> int:
    """Legendre symbol by Euler's criterion. Slow; kept as a test oracle."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@lru_cache(maxsize=256)
def symbol_table(n: int) -> np.ndarray:
    """Read-only array t -> jacobi(t, n) for 0 <= t < n."""
    table = np.array([jacobi(t, n) for t in range(n)], dtype=np.int64)
    table.setflags(write=False)
    return table


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    return [q for q in range(max(lo, 2), hi + 1) if is_prime(q)]


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization; adequate for n <= 10^7."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    q = 2
    while q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    result = n
    for q in factorize(n):
        result -= result // q
    return result


def crt_reconstruct(residues: Sequence[int], moduli: Sequence[int]) -> int:
    """Unique x in (-M/2, M/2] with x = r_i mod m_i, M the product of the moduli."""
    if len(residues) != len(moduli):
        raise ValueError("residues and moduli differ in length")
    for i, m in enumerate(moduli):
        if m < 1:
            raise ValueError(f"modulus must be positive, got {m}")
        for m2 in moduli[i + 1:]:
            if math.gcd(m, m2) != 1:
                raise ValueError(f"moduli {m} and {m2} are not coprime")
    return _crt_symmetric(residues, moduli)


def _crt_symmetric(residues: Iterable[int], moduli: Iterable[int]) -> int:
    x, big_m = 0, 1
    for r, m in zip(residues, moduli):
        t = (r - x) * pow(big_m, -1, m) % m if m > 1 else 0
        x += big_m * t
        big_m *= m
    x %= big_m
    return x - big_m if x > big_m // 2 else x


def hadamard_bound(matrix) -> int:
    """Ceiling of the product of Euclidean row norms; |det| never exceeds it."""
    rows = [[int(v) for v in row] for row in matrix]
    prod = 1
    for row in rows:
        prod *= sum(v * v for v in row)
    root = math.isqrt(prod)
    return root if root * root == prod else root + 1


def sum_two_squares(n: int) -> TwoSquares | None:
    if n < 1:
        raise ValueError("n must be positive")
    if not is_sum_of_two_squares(n):
        return None
    for a in range(math.isqrt(n // 2) + 1):
        b2 = n - a * a
        b = math.isqrt(b2)
        if b * b == b2:
            return TwoSquares(a, b, n)
    raise AssertionError(f"factorization criterion and search disagree at {n}")


def is_sum_of_two_squares(n: int) -> bool:
    return all(q % 4 != 3 or e % 2 == 0 for q, e in factorize(n).items())


def jacobsthal_sum(n: int) -> int:
    """Sum of jacobi(x(x^2+1), n) over a full residue system mod n."""
    if n <= 1 or n % 2 == 0:
        raise ValueError(f"need odd n > 1, got {n}")
    x = np.arange(n, dtype=np.int64)
    return int(symbol_table(n)[x * (x * x % n + 1) % n].sum())


def wilson_involution(p: int) -> dict[int, int]:
    """k -> r_k on {1..(p-1)/2} with q*k = +-r_k (mod p), q = ((p-1)/2)!."""
    if p % 4 != 1 or not is_prime(p):
        raise ValueError(f"need a prime p = 1 (mod 4), got {p}")
    half = (p - 1) // 2
    q = math.factorial(half) % p
    out = {}
    for k in range(1, half + 1):
        r = q * k % p
        out[k] = min(r, p - r)
    return out
