"""Identities as data, and the machinery to verify them at a modulus.

An identity pairs a matrix family with either a closed-form right-hand side
(a callable returning a multiaffine polynomial over the quadratic-field
invariants) or a predicate on the determinant (divisibility, vanishing,
residuosity). Right-hand sides may carry one integer unknown, which
:func:`discover` solves for.
"""

from __future__ import annotations

import fnmatch
import math
import random
import time
import zlib
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

from .arith import is_prime, jacobi
from .detengine import alternate, choose_engine
from .matrixgen import Atom, Family, MatrixSpec, family
from .multiaffine import (
    MultiAffinePoly,
    NonIntegralError,
    det_poly,
    evaluate,
    multiaffinity_guard,
    render,
)
from .quadfield import invariants

OUTCOMES = ("match", "mismatch", "inapplicable", "guard_failed")
STATUSES = ("theorem", "conjecture", "known_result")


class DiscoveryError(ArithmeticError):
    pass


class UnknownIdentity(KeyError):
    pass


class EngineDisagreement(RuntimeError):
    pass


X, Y, Z, W = (MultiAffinePoly.var(v) for v in "xyzw")


class Ctx:
    """Values a right-hand side may refer to at modulus p."""

    def __init__(self, p: int, unknown: int | None = None):
        self.p = p
        self.n = (p - 1) // 2
        self.u = unknown
        self.x, self.y, self.z, self.w = X, Y, Z, W

    @cached_property
    def L(self) -> int:
        return jacobi(2, self.p)

    @cached_property
    def inv(self):
        return invariants(self.p)

    @property
    def a(self) -> Fraction:
        return self.inv.a

    @property
    def b(self) -> Fraction:
        return self.inv.b

    @property
    def ap(self) -> Fraction:
        return self.inv.a_prime

    @property
    def bp(self) -> Fraction:
        return self.inv.b_prime

    @property
    def h(self) -> int:
        """Class number of Q(sqrt(-p)); only meaningful for p = 3 (mod 4)."""
        return self.inv.h_minus

    @property
    def s(self) -> int:
        return -1 if (self.h - 1) // 2 % 2 else 1

    def pow2(self, c: int) -> int:
        """2^((p+c)/2)."""
        e, r = divmod(self.p + c, 2)
        assert r == 0 and e >= 0
        return 2**e

    def powp(self, c: int, base: int | None = None) -> int:
        """p^((p+c)/4), or base^((p+c)/4) if given."""
        e, r = divmod(self.p + c, 4)
        assert r == 0 and e >= 0
        return (self.p if base is None else base) ** e


Rhs = Callable[[Ctx], "MultiAffinePoly | int | Fraction"]


def by_class(one: Rhs, three: Rhs) -> Rhs:
    """Pick a formula by p mod 4."""
    return lambda c: one(c) if c.p % 4 == 1 else three(c)


@dataclass(frozen=True)
class ClaimResult:
    ok: bool
    computed: str
    expected: str
    residual: str


Check = Callable[[int, str], ClaimResult]


@dataclass(frozen=True)
class Identity:
    id: str
    status: str
    condition: str
    applies: Callable[[int], bool]
    domain: str = "prime"
    family: Family | Callable[[int], Family] | None = None
    rhs: Rhs | None = None
    check: Check | None = None
    unknown: str | None = None
    positive_unknown: bool = False
    published: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        if self.domain not in ("prime", "odd"):
            raise ValueError(f"bad domain {self.domain!r}")
        if (self.rhs is None) == (self.check is None):
            raise ValueError(f"{self.id}: give exactly one of rhs, check")
        if self.rhs is not None and self.family is None:
            raise ValueError(f"{self.id}: a closed form needs a family")

    def spec_at(self, n: int) -> MatrixSpec:
        fam = self.family if isinstance(self.family, Family) else self.family(n)
        return fam.at(n)

    def applicable(self, n: int) -> bool:
        if n < 3 or n % 2 == 0:
            return False
        if self.domain == "prime" and not is_prime(n):
            return False
        return bool(self.applies(n))


@dataclass
class VerificationReport:
    id: str
    modulus: int
    outcome: str
    computed: str = ""
    expected: str = ""
    residual: str = ""
    engine: str = ""
    millis: float = 0.0
    unknown: int | None = None

    def as_dict(self, timing: bool = True) -> dict:
        d = {
            "id": self.id,
            "modulus": self.modulus,
            "outcome": self.outcome,
            "computed": self.computed,
            "expected": self.expected,
            "residual": self.residual,
            "engine": self.engine,
            "millis": round(self.millis, 3) if timing else 0,
        }
        d["unknown"] = self.unknown
        return d


# ---------------------------------------------------------------- evaluation


def _as_poly(value) -> MultiAffinePoly:
    return value if isinstance(value, MultiAffinePoly) else MultiAffinePoly.const(value)


def rhs_eval(identity: Identity, p: int, unknown: int | None = None) -> MultiAffinePoly:
    """Integer polynomial of the right-hand side; raises NonIntegralError."""
    if identity.rhs is None:
        raise ValueError(f"{identity.id} is a predicate claim")
    if identity.unknown is not None and unknown is None:
        raise ValueError(f"{identity.id} needs a value for {identity.unknown}")
    return _as_poly(identity.rhs(Ctx(p, unknown))).to_integer()


def _rhs_raw(identity: Identity, p: int, unknown) -> MultiAffinePoly:
    return _as_poly(identity.rhs(Ctx(p, unknown)))


def has_unknown_at(identity: Identity, p: int) -> bool:
    """Whether the right-hand side at p actually involves the unknown."""
    if identity.unknown is None or not identity.applicable(p):
        return False
    return _rhs_raw(identity, p, 1) != _rhs_raw(identity, p, 0)


def solve_unknown(identity: Identity, p: int, computed: MultiAffinePoly) -> int | None:
    """Solve computed = R0 + u*R1 for the integer u.

    Returns None when the right-hand side does not involve the unknown at p.
    """
    r0 = _rhs_raw(identity, p, 0)
    r1 = _rhs_raw(identity, p, 1) - r0
    if r1.is_zero():
        return None
    diff = computed - r0
    mono = min(r1.coeffs, key=lambda s: (len(s), sorted(s)))
    u = Fraction(diff.coeff(*mono)) / Fraction(r1.coeffs[mono])
    if u.denominator != 1:
        raise DiscoveryError(f"{identity.unknown} = {u} is not an integer at p={p}")
    u = int(u)
    if diff - u * r1 != MultiAffinePoly({}):
        raise DiscoveryError(
            f"no value of {identity.unknown} fits at p={p}: residual {render(diff - u * r1)}"
        )
    if identity.positive_unknown and u <= 0:
        raise DiscoveryError(f"{identity.unknown} = {u} is not positive at p={p}")
    return u


_guard_done: dict[str, bool] = {}


def guard_for(identity: Identity) -> bool:
    """Run the multiaffinity guard once per identity at its smallest modulus >= 7."""
    if identity.family is None:
        return True
    if identity.id not in _guard_done:
        n = next((m for m in range(7, 400, 2) if identity.applicable(m)), None)
        ok = True
        if n is not None:
            spec = identity.spec_at(n)
            ok = not spec.vars or multiaffinity_guard(spec, random.Random(zlib.crc32(identity.id.encode())), probes=2)
        _guard_done[identity.id] = ok
    return _guard_done[identity.id]


def _compare(identity: Identity, p: int, computed: MultiAffinePoly):
    """(ok, expected text, residual text, unknown value)."""
    try:
        u = None
        if identity.unknown is not None:
            try:
                u = solve_unknown(identity, p, computed)
            except DiscoveryError as exc:
                return False, render(_rhs_raw(identity, p, 0)), str(exc), None
        expected = rhs_eval(identity, p, u if u is not None else 0)
    except NonIntegralError as exc:
        return False, "non-integral", str(exc), None
    residual = computed - expected
    ok = residual.is_zero()
    return ok, render(expected), render(residual), u


def verify(identity: Identity, n: int, engine: str = "auto", guard: bool = True) -> VerificationReport:
    t0 = time.perf_counter()
    if not identity.applicable(n):
        return VerificationReport(identity.id, n, "inapplicable")
    if guard and not guard_for(identity):
        return VerificationReport(identity.id, n, "guard_failed", engine=engine)

    if identity.check is not None:
        res = identity.check(n, engine)
        used = engine
        if not res.ok:
            again = identity.check(n, alternate(engine))
            if again.ok:
                raise EngineDisagreement(f"{identity.id} at n={n}: engines disagree")
            used = f"{engine}+{alternate(engine)}"
        return VerificationReport(
            identity.id, n, "match" if res.ok else "mismatch",
            res.computed, res.expected, res.residual, used,
            (time.perf_counter() - t0) * 1000,
        )

    spec = identity.spec_at(n)
    used = choose_engine(spec.size, engine)
    computed = det_poly(spec, used)
    ok, expected, residual, u = _compare(identity, n, computed)
    if not ok:
        other = alternate(used)
        recheck = det_poly(spec, other)
        if recheck != computed:
            raise EngineDisagreement(f"{identity.id} at n={n}: {render(computed)} vs {render(recheck)}")
        used = f"{used}+{other}"
    return VerificationReport(
        identity.id, n, "match" if ok else "mismatch",
        render(computed), expected, residual, used,
        (time.perf_counter() - t0) * 1000, u,
    )


def discover(identity: Identity, p: int, engine: str = "auto") -> int:
    """The integer value of the identity's unknown at p."""
    if identity.unknown is None:
        raise ValueError(f"{identity.id} has no unknown")
    if not identity.applicable(p):
        raise ValueError(f"{identity.id} does not apply at {p}")
    spec = identity.spec_at(p)
    u = solve_unknown(identity, p, det_poly(spec, choose_engine(spec.size, engine)))
    if u is None:
        raise DiscoveryError(f"{identity.id} has no unknown at p={p}")
    return u


def moduli(lo: int, hi: int, primes_only: bool) -> list[int]:
    return [n for n in range(max(lo, 3), hi + 1) if n % 2 and (not primes_only or is_prime(n))]


def _verify_many(args) -> list[VerificationReport]:
    ids, n, engine = args
    return [verify(get(i), n, engine) for i in ids]


def scan(
    identities: Sequence[Identity],
    ns: Iterable[int],
    engine: str = "auto",
    jobs: int = 1,
) -> list[VerificationReport]:
    """Verify every identity at every applicable modulus, ordered by modulus."""
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    work = []
    for n in sorted(set(ns)):
        ids = [i.id for i in identities if i.applicable(n)]
        if ids:
            work.append((ids, n, engine))
    for i in identities:
        guard_for(i)
    if jobs == 1 or len(work) < 2:
        batches = map(_verify_many, work)
    else:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            batches = pool.map(_verify_many, work, chunksize=1)
    return [r for batch in batches for r in batch]


# ------------------------------------------------------------- roster access

_REGISTRY: dict[str, Identity] = {}


def register(identity: Identity) -> Identity:
    if identity.id in _REGISTRY:
        raise ValueError(f"duplicate id {identity.id}")
    _REGISTRY[identity.id] = identity
    return identity


def all_identities() -> list[Identity]:
    from . import roster  # noqa: F401  (populates the registry)

    return list(_REGISTRY.values())


def get(identity_id: str) -> Identity:
    all_identities()
    try:
        return _REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentity(identity_id) from None


def select(patterns: Iterable[str]) -> list[Identity]:
    """Identities whose id matches any glob, in roster order."""
    pats = list(patterns)
    out = [i for i in all_identities() if any(fnmatch.fnmatchcase(i.id, pat) for pat in pats)]
    if not out:
        raise UnknownIdentity(", ".join(pats))
    return out


# ------------------------------------------------------- S(d,p) and T(d,p)


def st_relation_check(d: int, p: int, engine: str = "auto") -> VerificationReport:
    """Check (p-1) S = 2T or S = 0, and the residue class of T mod p."""
    t0 = time.perf_counter()
    if d % p == 0:
        raise ValueError("d must be prime to p")
    atom = Atom(alpha=1, gamma=d)
    s_val = det_poly(family([(1, atom)], "1..(p-1)/2", vars="").at(p), engine).coeff()
    t_val = det_poly(family([(1, atom)], "0..(p-1)/2", vars="").at(p), engine).coeff()
    dp = jacobi(d, p)
    if dp == 1:
        rel_ok = (p - 1) * s_val == 2 * t_val
        rel = f"(p-1)S - 2T = {(p - 1) * s_val - 2 * t_val}"
    else:
        rel_ok = s_val == 0
        rel = f"S = {s_val}"
    want = jacobi(2, p) if dp == 1 else 1
    got = jacobi(t_val, p)
    ok = rel_ok and got == want
    return VerificationReport(
        f"known.ST.d{d}", p, "match" if ok else "mismatch",
        computed=f"S={s_val}; T={t_val}; (T/p)={got}",
        expected=("(p-1)S=2T" if dp == 1 else "S=0") + f"; (T/p)={want}",
        residual=f"{rel}; (T/p)-target={got - want}",
        engine=engine,
        millis=(time.perf_counter() - t0) * 1000,
    )


# ------------------------------------------------- randomized meta identities


@dataclass(frozen=True)
class MetaInstance:
    p: int
    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]

    def atoms(self) -> tuple[tuple[int, Atom], ...]:
        return tuple((ci, Atom(delta=ai, eps_coef=bi)) for ai, bi, ci in zip(self.a, self.b, self.c))

    @property
    def A(self) -> int:
        return sum(ci * jacobi(ai, self.p) for ai, ci in zip(self.a, self.c))

    @property
    def B(self) -> int:
        return sum(ci * jacobi(bi, self.p) for bi, ci in zip(self.b, self.c))


def random_meta_instance(rng: random.Random, p: int, max_terms: int = 3, n: int | None = None) -> MetaInstance:
    m = rng.randint(1, max_terms)
    pairs = []
    while len(pairs) < m:
        a, b = rng.randint(-6, 6), rng.randint(-6, 6)
        if a or b:
            pairs.append((a, b))
    c = tuple(rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(m))
    if n is None:
        n = rng.randint(1, p - 1)
    return MetaInstance(p, n, tuple(a for a, _ in pairs), tuple(b for _, b in pairs), c)


def _spec(inst: MetaInstance, lo: int, vars: str, extra=()) -> MatrixSpec:
    return MatrixSpec(inst.p, (lo, inst.n), (lo, inst.n), inst.atoms() + tuple(extra), tuple(vars))


def meta_identity_check(inst: MetaInstance, which: str, engine: str = "bareiss") -> bool:
    """Check one of the three rank-one reduction identities on an instance.

    ``jk``: adding w*(jk/p) to the 0-based matrix leaves its determinant.
    ``shift``: c*|f + w(jk/p)|_1 = c*|f|_1 - w*|f|_0.
    ``border``: c*|x + f + y(j/p) + z(k/p)|_0
                = (y+A)(z+B)|f|_0 + c*x*|f - A(j/p) - B(k/p)|_1.
    """
    c = inst.A * inst.B
    f0 = det_poly(_spec(inst, 0, ""), engine).coeff()
    if which == "jk":
        return det_poly(_spec(inst, 0, "w"), engine) == MultiAffinePoly.const(f0)
    if which == "shift":
        f1 = det_poly(_spec(inst, 1, ""), engine).coeff()
        lhs = c * det_poly(_spec(inst, 1, "w"), engine)
        return lhs == c * f1 - f0 * W
    if which == "border":
        lhs = c * det_poly(_spec(inst, 0, "xyz"), engine)
        g = det_poly(_spec(inst, 1, "yz"), engine)
        g_val = evaluate(g, {"y": -inst.A, "z": -inst.B})
        rhs = (Y + inst.A) * (Z + inst.B) * f0 + c * g_val * X
        return lhs == rhs
    raise ValueError(f"unknown meta identity {which!r}")


META_IDENTITIES = ("jk", "shift", "border")


def meta_suite(count: int, primes: Sequence[int], seed: int = 0, max_terms: int = 3) -> list[tuple[MetaInstance, str, bool]]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        p = rng.choice(list(primes))
        which = META_IDENTITIES[i % 3]
        # the border identity holds for every n >= 1; the others need n < p
        n = rng.randint(1, p + 3) if which == "border" else None
        inst = random_meta_instance(rng, p, max_terms, n)
        out.append((inst, which, meta_identity_check(inst, which)))
    return out


def lemma_corner_check(matrix, x: int) -> bool:
    """det(x + A) - det(A) == x * det(B) for the corner-reduced B."""
    from .detengine import corner_reduced, det_bareiss

    shifted = [[int(v) + x for v in row] for row in matrix]
    return det_bareiss(shifted) - det_bareiss(matrix) == x * det_bareiss(corner_reduced(matrix))


def isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None
