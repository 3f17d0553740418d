"""Exact integer determinants.

Two independent routes: fraction-free Bareiss elimination over Python ints,
and a multi-modular route that eliminates modulo many primes at once and
lifts the residues by CRT past twice the Hadamard bound.

The modular kernel keeps residues in float64 in balanced form (|r| <= p/2)
with every prime below 2**21, so a block product of inner size up to 2**11
is exact in a double; trailing updates are then plain BLAS matmuls.
"""

from __future__ import annotations

from typing import Literal, Sequence

import numpy as np

from .arith import _crt_symmetric, hadamard_bound, is_prime

Engine = Literal["bareiss", "modular", "auto"]
ENGINES = ("bareiss", "modular", "auto")
AUTO_THRESHOLD = 64

POOL_TOP = 2**21
POOL_SIZE = 4096
_pool: list[int] = []

# Cells per stacked elimination batch (~32 MB of float64).
_BATCH_CELLS = 4_000_000
# Inner dimension of a block product must stay below 2**53 / (p/2)**2.
_MAX_INNER = 2**11


class PrimePoolExhausted(RuntimeError):
    pass


def prime_pool(count: int) -> list[int]:
    """The ``count`` largest primes below 2**21, descending."""
    if count > POOL_SIZE:
        raise PrimePoolExhausted(f"{count} moduli requested, pool holds {POOL_SIZE}")
    q = _pool[-1] - 2 if _pool else POOL_TOP - 1
    while len(_pool) < count:
        if is_prime(q):
            _pool.append(q)
        q -= 2
    return _pool[:count]


def moduli_for(bound: int) -> list[int]:
    """Shortest prefix of the pool whose product exceeds 2*bound."""
    need, prod, count = 2 * bound + 1, 1, 0
    while prod < need:
        count += 1
        prod *= prime_pool(count)[-1]
    return prime_pool(max(count, 1))


def _square_size(matrix) -> int:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    return n


def is_skew_symmetric(matrix) -> bool:
    a = np.asarray(matrix, dtype=object)
    return a.size == 0 or bool((a + a.T == 0).all())


def det_bareiss(matrix) -> int:
    """Exact determinant by fraction-free elimination; 0x0 gives 1."""
    n = _square_size(matrix)
    a = [[int(v) for v in row] for row in matrix]
    sign, prev = 1, 1
    for c in range(n - 1):
        if a[c][c] == 0:
            for r in range(c + 1, n):
                if a[r][c] != 0:
                    a[c], a[r] = a[r], a[c]
                    sign = -sign
                    break
            else:
                return 0
        piv, row_c = a[c][c], a[c]
        for r in range(c + 1, n):
            row_r = a[r]
            lead = row_r[c]
            for k in range(c + 1, n):
                row_r[k] = (piv * row_r[k] - lead * row_c[k]) // prev
        prev = piv
    return sign * a[n - 1][n - 1] if n else 1


def _inv_mod(v: np.ndarray, m: np.ndarray) -> np.ndarray:
    """Elementwise v**(m-2) mod m for int64 arrays; zero maps to zero."""
    e = m - 2
    result = np.ones_like(v)
    base = v % m
    while e.any():
        odd = (e & 1).astype(bool)
        result = np.where(odd, result * base % m, result)
        base = base * base % m
        e = e >> 1
    return result


def _balance(x: np.ndarray, p: np.ndarray) -> np.ndarray:
    q = x * (1.0 / p)
    np.rint(q, out=q)
    q *= p
    x -= q
    return x


class _StackLU:
    """Recursive column-split LU of a (B, n, n) stack, slice b modulo primes[b]."""

    def __init__(self, stack: np.ndarray, primes: Sequence[int]):
        self.pm = np.asarray(primes, dtype=np.int64)
        self.p3 = self.pm.astype(np.float64)[:, None, None]
        self.a = _balance(np.array(stack, dtype=np.float64, order="C"), self.p3)
        self.n = self.a.shape[1]
        self.idx = np.arange(self.a.shape[0])
        self.det = np.ones(self.a.shape[0], dtype=np.int64)

    def run(self) -> np.ndarray:
        if self.n:
            self._factor(0, self.n)
        return self.det

    def _pivot(self, c: int) -> None:
        a, pm = self.a, self.pm
        piv = (a[:, c:, c] != 0).argmax(axis=1) + c
        moved = piv != c
        if moved.any():
            s, pr = self.idx[moved], piv[moved]
            tmp = a[s, c, :].copy()
            a[s, c, :] = a[s, pr, :]
            a[s, pr, :] = tmp
            self.det[moved] = (pm[moved] - self.det[moved]) % pm[moved]
        pv = a[:, c, c].astype(np.int64)
        self.det = self.det * (pv % pm) % pm
        if c + 1 < self.n:
            inv = _inv_mod(pv, pm).astype(np.float64)
            a[:, c + 1:, c] = _balance(a[:, c + 1:, c] * inv[:, None], self.p3[:, :, 0])

    def _update(self, rows: slice, cols: slice, inner: slice) -> None:
        a = self.a
        blk = a[:, rows, cols]
        for k in range(inner.start, inner.stop, _MAX_INNER):
            k1 = min(k + _MAX_INNER, inner.stop)
            blk -= np.matmul(a[:, rows, k:k1], a[:, k:k1, cols])
            _balance(blk, self.p3)

    def _solve_unit_lower(self, r0: int, r1: int, cols: slice) -> None:
        if r1 - r0 <= 1:
            return
        rm = (r0 + r1) // 2
        self._solve_unit_lower(r0, rm, cols)
        self._update(slice(rm, r1), cols, slice(r0, rm))
        self._solve_unit_lower(rm, r1, cols)

    def _factor(self, c0: int, c1: int) -> None:
        if c1 - c0 == 1:
            self._pivot(c0)
            return
        cm = (c0 + c1) // 2
        self._factor(c0, cm)
        self._solve_unit_lower(c0, cm, slice(cm, c1))
        self._update(slice(cm, None), slice(cm, c1), slice(c0, cm))
        self._factor(cm, c1)


def det_residues(stack: np.ndarray, primes: Sequence[int]) -> np.ndarray:
    """det(stack[b]) mod primes[b], each prime odd and below 2**21."""
    if max(primes) >= POOL_TOP:
        raise ValueError("modular kernel needs primes below 2**21")
    return _StackLU(stack, primes).run()


def det_modular_many(matrices: Sequence) -> list[int]:
    """Exact determinants of equal-size integer matrices by CRT."""
    if not len(matrices):
        return []
    n = _square_size(matrices[0])
    if n == 0:
        return [1] * len(matrices)
    primes = moduli_for(max(hadamard_bound(m) for m in matrices))
    objs = [np.asarray(m, dtype=object) for m in matrices]
    wide = any(np.abs(m).max() >= 2**52 for m in objs)
    ints = None if wide else np.stack([m.astype(np.int64) for m in objs])
    jobs = [(i, j) for i in range(len(objs)) for j in range(len(primes))]
    residues = np.empty((len(objs), len(primes)), dtype=np.int64)
    per_batch = max(1, _BATCH_CELLS // (n * n))
    for start in range(0, len(jobs), per_batch):
        chunk = jobs[start:start + per_batch]
        if ints is None:
            block = np.stack([(objs[i] % primes[j]).astype(np.int64) for i, j in chunk])
        else:
            block = ints[[i for i, _ in chunk]]
        res = det_residues(block, [primes[j] for _, j in chunk])
        for (i, j), r in zip(chunk, res):
            residues[i, j] = r
    return [_crt_symmetric([int(r) for r in row], primes) for row in residues]


def det_modular(matrix) -> int:
    return det_modular_many([matrix])[0]


def det_mod(matrix, m: int) -> int:
    """det(matrix) mod m, in [0, m)."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    n = _square_size(matrix)
    if n == 0:
        return 1 % m
    if 2 < m < POOL_TOP and is_prime(m):
        a = (np.asarray(matrix, dtype=object) % m).astype(np.int64)
        return int(det_residues(a[None], [m])[0]) % m
    return det(matrix) % m


def choose_engine(n: int, engine: str = "auto") -> str:
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    if engine == "auto":
        return "modular" if n > AUTO_THRESHOLD else "bareiss"
    return engine


def alternate(engine: str) -> str:
    return "bareiss" if engine == "modular" else "modular"


def det_many(matrices: Sequence, engine: str = "auto") -> list[int]:
    """Determinants of equal-size matrices; odd skew-symmetric ones are 0."""
    if not len(matrices):
        return []
    n = _square_size(matrices[0])
    out: list[int] = [0] * len(matrices)
    todo = [i for i, m in enumerate(matrices) if not (n % 2 and is_skew_symmetric(m))]
    if choose_engine(n, engine) == "modular":
        vals = det_modular_many([matrices[i] for i in todo])
    else:
        vals = [det_bareiss(matrices[i]) for i in todo]
    for i, v in zip(todo, vals):
        out[i] = v
    return out


def det(matrix, engine: str = "auto") -> int:
    return det_many([matrix], engine)[0]


def corner_reduced(matrix) -> list[list[int]]:
    """b[j][k] = a[j][k] - a[j][0] - a[0][k] + a[0][0] over j, k >= 1.

    det(x + A) - det(A) = x * det(B) for this B.
    """
    a = [[int(v) for v in row] for row in matrix]
    n = len(a)
    return [[a[j][k] - a[j][0] - a[0][k] + a[0][0] for k in range(1, n)] for j in range(1, n)]
