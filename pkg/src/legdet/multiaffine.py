"""Determinants of rank-one perturbed families as multiaffine polynomials.

Every variable multiplies a rank-one matrix, so the determinant has degree at
most one in each variable. It is recovered exactly from its values on the
0/1 corners by Moebius inversion over the subset lattice.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Mapping

from .detengine import det_bareiss, det_many
from .matrixgen import VARIABLES, MatrixSpec, build_numeric


class NonIntegralError(ArithmeticError):
    pass


Number = int | Fraction


def _order(names) -> tuple[str, ...]:
    names = set(names)
    bad = names - set(VARIABLES)
    if bad:
        raise ValueError(f"unknown variables {sorted(bad)}")
    return tuple(v for v in VARIABLES if v in names)


@dataclass(frozen=True)
class MultiAffinePoly:
    """Sum of coeff * prod(vars in S) over subsets S, keyed by frozenset.

    Missing keys are zero; zero coefficients are never stored.
    """

    coeffs: Mapping[frozenset, Number]

    def __post_init__(self):
        clean = {}
        for s, c in self.coeffs.items():
            s = frozenset(s)
            _order(s)
            if c:
                clean[s] = clean.get(s, 0) + c
        object.__setattr__(self, "coeffs", {s: c for s, c in clean.items() if c})

    @classmethod
    def const(cls, c: Number) -> MultiAffinePoly:
        return cls({frozenset(): c})

    @classmethod
    def var(cls, name: str) -> MultiAffinePoly:
        return cls({frozenset([name]): 1})

    @property
    def vars(self) -> tuple[str, ...]:
        return _order(set().union(*self.coeffs) if self.coeffs else ())

    def coeff(self, *names: str) -> Number:
        return self.coeffs.get(frozenset(names), 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiAffinePoly.const(other)
        if not isinstance(other, MultiAffinePoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    @staticmethod
    def _lift(other) -> MultiAffinePoly:
        if isinstance(other, MultiAffinePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiAffinePoly.const(other)
        raise TypeError(f"cannot combine with {type(other).__name__}")

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out.get(s, 0) + c
        return MultiAffinePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiAffinePoly({s: -c for s, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out: dict = {}
        for s1, c1 in self.coeffs.items():
            for s2, c2 in other.coeffs.items():
                if s1 & s2:
                    raise ValueError(f"product is not multiaffine: shared {sorted(s1 & s2)}")
                s = s1 | s2
                out[s] = out.get(s, 0) + c1 * c2
        return MultiAffinePoly(out)

    __rmul__ = __mul__

    def to_integer(self) -> MultiAffinePoly:
        out = {}
        for s, c in self.coeffs.items():
            c = Fraction(c)
            if c.denominator != 1:
                raise NonIntegralError(f"coefficient {c} of {_mono(s) or '1'} is not an integer")
            out[s] = int(c)
        return MultiAffinePoly(out)

    def __str__(self) -> str:
        return render(self)


def _mono(s) -> str:
    return "*".join(_order(s))


def _sort_key(s):
    return (len(s), [VARIABLES.index(v) for v in _order(s)])


def render(poly: MultiAffinePoly) -> str:
    """Canonical text: by subset size, then variable order, e.g. ``-2 - 5*x``."""
    if poly.is_zero():
        return "0"
    parts = []
    for s in sorted(poly.coeffs, key=_sort_key):
        c = poly.coeffs[s]
        mag = abs(c)
        body = _mono(s)
        if not body:
            term = str(mag)
        elif mag == 1:
            term = body
        else:
            term = f"{mag}*{body}"
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts)


def parse_poly(text: str) -> MultiAffinePoly:
    """Inverse of :func:`render` (accepts any sum of signed monomials)."""
    out = MultiAffinePoly({})
    tokens = text.replace("-", " - ").replace("+", " + ").split()
    sign = 1
    for tok in tokens:
        if tok in "+-":
            sign = -1 if tok == "-" else 1
            continue
        coef: Number = 1
        names = []
        for piece in tok.split("*"):
            if piece in VARIABLES:
                names.append(piece)
            else:
                coef *= Fraction(piece)
        if isinstance(coef, Fraction) and coef.denominator == 1:
            coef = int(coef)
        out = out + MultiAffinePoly({frozenset(names): sign * coef})
        sign = 1
    return out


def corners(names) -> list[dict[str, int]]:
    """All 0/1 assignments, indexed by bitmask (bit i <-> names[i])."""
    names = tuple(names)
    return [{v: (mask >> i) & 1 for i, v in enumerate(names)} for mask in range(1 << len(names))]


def interpolate(evals: Mapping[tuple, int] | list[int], names=()) -> MultiAffinePoly:
    """Moebius inversion of corner values.

    ``evals`` is either a list indexed by bitmask over ``names`` or a mapping
    from 0/1 tuples (in ``names`` order) to values.
    """
    names = tuple(names)
    k = len(names)
    if isinstance(evals, Mapping):
        try:
            vals = [evals[tuple((m >> i) & 1 for i in range(k))] for m in range(1 << k)]
        except KeyError as exc:
            raise ValueError(f"missing corner {exc.args[0]}") from None
    else:
        vals = list(evals)
    if len(vals) != 1 << k:
        raise ValueError(f"need {1 << k} corner values, got {len(vals)}")
    # in-place subset-lattice difference transform
    for i in range(k):
        bit = 1 << i
        for m in range(1 << k):
            if m & bit:
                vals[m] -= vals[m ^ bit]
    return MultiAffinePoly({frozenset(v for i, v in enumerate(names) if (m >> i) & 1): c
                            for m, c in enumerate(vals)})


def interpolate_direct(evals: list[int], names=()) -> MultiAffinePoly:
    """Textbook inclusion-exclusion, kept as an oracle for :func:`interpolate`."""
    names = tuple(names)
    out = {}
    for m in range(1 << len(names)):
        total = 0
        sub = m
        while True:
            total += (-1) ** (bin(m).count("1") - bin(sub).count("1")) * evals[sub]
            if sub == 0:
                break
            sub = (sub - 1) & m
        out[frozenset(v for i, v in enumerate(names) if (m >> i) & 1)] = total
    return MultiAffinePoly(out)


def evaluate(poly: MultiAffinePoly, point: Mapping[str, Number]) -> Number:
    missing = [v for v in poly.vars if v not in point]
    if missing:
        raise KeyError(f"no value for {missing}")
    total: Number = 0
    for s, c in poly.coeffs.items():
        term = c
        for v in s:
            term *= point[v]
        total += term
    return total


def all_monomials(names) -> list[frozenset]:
    names = _order(names)
    return [frozenset(c) for r in range(len(names) + 1) for c in combinations(names, r)]


@lru_cache(maxsize=4096)
def _det_poly_cached(spec: MatrixSpec, engine: str) -> MultiAffinePoly:
    mats = [build_numeric(spec, a) for a in corners(spec.vars)]
    return interpolate(det_many(mats, engine), spec.vars)


def det_poly(spec: MatrixSpec, engine: str = "auto") -> MultiAffinePoly:
    """Exact determinant of ``spec`` as a polynomial in its variables."""
    if len(spec.vars) > 4:
        raise ValueError("at most four variables")
    return _det_poly_cached(spec, engine)


def multiaffinity_guard(
    spec: MatrixSpec,
    rng: random.Random | None = None,
    build: Callable = build_numeric,
    probes: int = 1,
) -> bool:
    """Check the second difference in each variable vanishes at random points."""
    rng = rng or random.Random(0)
    for _ in range(probes):
        for v in spec.vars:
            base = {u: rng.randint(-5, 5) for u in spec.vars}
            vals = []
            for t in (0, 1, 2):
                base[v] = t
                vals.append(det_bareiss(build(spec, dict(base))))
            if vals[2] - 2 * vals[1] + vals[0] != 0:
                return False
    return True
