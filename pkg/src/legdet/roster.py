"""Every determinant identity and published value table, as registry entries.

Ids follow ``<kind><group>.<number>[.<part>]``: ``known.*`` for previously
established evaluations, ``thm*``/``lem*``/``cor*`` for proved results and
``conj*`` for the open ones.
"""

from __future__ import annotations

import random
import zlib
from fractions import Fraction

from .arith import euler_phi, is_sum_of_two_squares, jacobi, jacobsthal_sum
from .matrixgen import family
from .multiaffine import det_poly
from .registry import (
    ClaimResult,
    Identity,
    META_IDENTITIES,
    X,
    Y,
    Z,
    W,
    by_class,
    isqrt_exact,
    meta_identity_check,
    random_meta_instance,
    register,
    st_relation_check,
)

ONE_MOD_4 = lambda p: p % 4 == 1  # noqa: E731
THREE_MOD_4 = lambda p: p % 4 == 3  # noqa: E731
ABOVE_3 = lambda p: p > 3  # noqa: E731
ANY = lambda p: True  # noqa: E731

half = Fraction(1, 2)

FULL = "0..(p-1)/2"
ONE_N = "1..(p-1)/2"
ONE_N1 = "1..(p+1)/2"
ZERO_N1 = "0..(p-3)/2"
ONE_N2 = "1..(p-3)/2"


def _conj(id, condition, applies, fam, rhs, **kw):
    return register(Identity(id, "conjecture", condition, applies, family=fam, rhs=rhs, **kw))


def _thm(id, condition, applies, fam, rhs, status="theorem", **kw):
    return register(Identity(id, status, condition, applies, family=fam, rhs=rhs, **kw))


# ------------------------------------------------------ established values

_thm("known.C", "p > 3", ABOVE_3, family("j+k-1", ONE_N, vars="x"),
     by_class(lambda c: (-1) ** (c.n // 2) * 2**c.n * (c.b - c.a * X),
              lambda c: -(2**c.n) * X),
     status="known_result")
_thm("known.Cstar", "p > 3", ABOVE_3, family("j+k-1", ONE_N1, vars="x"),
     by_class(lambda c: (-1) ** (c.n // 2) * 2**c.n * (c.p * c.b * X - c.a),
              lambda c: 2**c.n),
     status="known_result")
_thm("known.2.10", "p = 1 (mod 4), or p > 3", lambda p: p % 4 == 1 or p > 3,
     family("j+k", FULL, vars="x"),
     by_class(lambda c: c.L * 2**c.n * (c.p * c.b * X - c.a), lambda c: 2**c.n),
     status="known_result")
_thm("known.evilx", "odd p", ANY, family("j-k", FULL, vars="x"),
     by_class(lambda c: c.L * c.p * c.bp * X - c.ap, lambda c: 1),
     status="known_result")


def _st_check(d):
    def check(p, engine):
        r = st_relation_check(d, p, engine)
        return ClaimResult(r.outcome == "match", r.computed, r.expected, r.residual)

    return check


for _d in (1, 2, 3):
    register(Identity(f"known.ST.d{_d}", "known_result", f"p not dividing {_d}",
                      lambda p, d=_d: d % p != 0, check=_st_check(_d)))

# ---------------------------------------------------------------- theorems

_thm("thm1.1.i.a", "p >= 7 (at least four rows)", lambda p: p >= 7,
     family([], FULL, vars="xyzw"), lambda c: 0)
_thm("thm1.1.i.b", "odd p", ANY, family([], "1..p+1", vars="xyzw"), lambda c: 0)
for _m in (0, 1):
    for _delta, _tag in ((1, "plus"), (-1, "minus")):
        _thm(f"thm1.1.ii.m{_m}.{_tag}", "p = 1 (mod 4), p > 5", lambda p: p % 4 == 1 and p > 5,
             family([(1, "j^2+k^2"), (_delta, "j^2-k^2")], f"{_m}..(p-1)/2", vars="x"),
             lambda c: 0)


def _meta_check(which):
    def check(p, engine):
        rng = random.Random(zlib.crc32(f"{which}:{p}".encode()))
        bad = []
        for _ in range(3):
            n = rng.randint(1, p + 3) if which == "border" else None
            inst = random_meta_instance(rng, p, 3, n)
            if not meta_identity_check(inst, which, engine):
                bad.append(inst)
        return ClaimResult(not bad, f"{3 - len(bad)}/3 random instances hold",
                           "3/3 random instances hold", "; ".join(map(repr, bad)))

    return check


for _which in META_IDENTITIES:
    register(Identity(f"thm1.2.{_which}", "theorem", "odd p, random instances", ANY,
                      check=_meta_check(_which)))

_conj("rem1.1", "p = 3 (mod 4)", THREE_MOD_4,
      family("j^2+k^2, j^2-k^2", ONE_N, vars="x"),
      lambda c: (c.n * X - 1) * c.powp(-3))

_thm("cor1.1.a", "p = 3 (mod 4)", THREE_MOD_4, family("j-k, j, -1:k", FULL, vars="x"), lambda c: 4)
_thm("cor1.1.b", "p = 3 (mod 4), p > 3", lambda p: p % 4 == 3 and p > 3,
     family("j+k, j, k", FULL, vars="x"), lambda c: c.pow2(3))

_thm("thm1.3.i", "p > 3", ABOVE_3, family("j+k", FULL, vars="xyz"),
     by_class(lambda c: c.L * 2**c.n * (c.p * c.b * X - (Y + 1) * (Z + 1) * c.a),
              lambda c: (Y + 1) * (Z + 1) * 2**c.n))
_thm("thm1.3.ii", "odd p", ANY, family("j-k", FULL, vars="xyz"),
     by_class(lambda c: c.L * c.p * c.bp * X - (1 + Y) * (1 + Z) * c.ap,
              lambda c: (1 + Y) * (1 - Z)))
_thm("thm1.4.a", "p > 3", ABOVE_3, family("j+k-1", ONE_N, vars="xyz"),
     by_class(lambda c: c.L * 2**c.n * ((Y * Z - X) * c.a + (Y + 1) * (Z + 1) * c.b),
              lambda c: 2**c.n * (Y * Z - X)))
_thm("thm1.4.b", "p > 3", ABOVE_3, family("j+k-1", ONE_N1, vars="xyz"),
     by_class(lambda c: c.L * 2**c.n * (c.p * c.b * (X - Y * Z) - c.a * (Y + 1) * (Z + 1)),
              lambda c: 2**c.n * (Y + 1) * (Z + 1)))
_thm("lem2.2.a", "p = 1 (mod 4), or p > 3", lambda p: p % 4 == 1 or p > 3,
     family("j+k, -1:j, -1:k", ONE_N, vars=""),
     by_class(lambda c: c.L * 2**c.n * c.p * c.b, lambda c: 0))
_thm("lem2.2.b", "odd p", ANY, family("j-k, -1:j, -1:-k", ONE_N, vars=""),
     by_class(lambda c: c.L * c.p * c.bp, lambda c: 0))

# -------------------------------------------- conjectures, symbols (j +- k)

_conj("conj3.1.i", "p > 3", ABOVE_3, family("j+k", FULL),
      by_class(lambda c: c.L * 2**c.n * (c.p * c.b * X + c.a * (W * X - (Y + 1) * (Z + 1))),
               lambda c: 2**c.n * ((Y + 1) * (Z + 1) - W * X)))
_conj("conj3.1.ii", "odd p", ANY, family("j-k", FULL),
      by_class(lambda c: c.ap * (W * X - (Y + 1) * (Z + 1)) + c.L * c.p * c.bp * X,
               lambda c: W * X + (1 + Y) * (1 - Z)))

_V32 = W * X - (Y + 1) * (Z + 1)
_conj("conj3.2.i", "p > 3", ABOVE_3, family("j+k", ZERO_N1),
      by_class(lambda c: c.L * c.pow2(-3) * ((c.p * c.b - 2 * c.a) * X + (c.a - 2 * c.b) * _V32),
               lambda c: c.pow2(-3) * (_V32 - 2 * X)))
_conj("conj3.2.ii", "odd p", ANY, family("j-k", ZERO_N1),
      by_class(lambda c: -c.ap * X - c.L * c.bp * _V32, lambda c: X))
_conj("conj3.3", "p >= 5", lambda p: p >= 5, family("j-k", "0..(p-5)/2"),
      by_class(lambda c: c.L * (2 * c.ap - c.p * c.bp) * X
               + (c.ap - 2 * c.bp) * ((1 + Y) * (1 + Z) - W * X),
               lambda c: W * X + (1 + Y) * (1 - Z)))
_conj("conj3.4", "p >= 7, p = 3 (mod 4)", lambda p: p >= 7 and p % 4 == 3,
      family("j-k", "0..(p-7)/2", vars="x"),
      lambda c: ((c.p - 2) // 3) ** 2 * X)
_conj("conj3.5.i", "p > 3", ABOVE_3, family("j+k", ONE_N),
      by_class(lambda c: c.L * 2**c.n * (c.a * (W - X) + c.b + (c.b - 1) * (Y + Z)
                                         - ((c.p + 1) * c.b - 2) * (W * X - Y * Z)),
               lambda c: -(2**c.n) * (W + X + c.s * (Y + Z + 2 * Y * Z - 2 * W * X))))
_conj("conj3.5.ii", "p > 3", ABOVE_3, family("j-k", ONE_N),
      by_class(lambda c: c.ap * (W - X) + c.L * (c.bp + (c.bp - 1) * (Y + Z)
                                                 + ((c.p + 1) * c.bp - 2) * (Y * Z - W * X)),
               lambda c: W + X - c.s * (Y + Z)))


def _c36_i_one(c):
    d = (c.p + 1) * c.b - 2 * (c.a + 1)
    return c.L * c.pow2(-3) * (c.b - c.a * X + (c.a - 2 * c.b) * W + (c.b - 1) * (Y + Z)
                               + d * (Y * Z - W * X))


def _c36_ii_one(c):
    e = c.ap - 2 * c.bp
    return (e + c.L * ((2 * c.ap - c.p * c.bp) * X - c.bp * W) + (e + 1) * (Y + Z)
            + 2 * (c.bp - 1) * (W * X - Y * Z))


_conj("conj3.6.i", "p >= 5", lambda p: p >= 5, family("j+k", ONE_N2),
      by_class(_c36_i_one,
               lambda c: c.pow2(-3) * (W + X + 2 * (W * X - Y * Z)
                                       + c.s * (Y + Z + 2 * Y * Z - 2 * W * X))))
_conj("conj3.6.ii", "p >= 5", lambda p: p >= 5, family("j-k", ONE_N2),
      by_class(_c36_ii_one,
               lambda c: 1 + (1 - c.s * c.L) * (2 * (W * X - Y * Z) + Y - Z)))

_conj("conj3.7.i", "p > 3", ABOVE_3, family("j+k, j-k", FULL),
      by_class(lambda c: c.L * c.powp(3) * X,
               lambda c: c.s * c.powp(-3) * (c.p * X + (2 - c.L) * c.h * ((Y + 2) * Z - W * X))))
_conj("conj3.7.ii", "p = 1 (mod 4)", ONE_MOD_4, family("j+k, -1:j-k", FULL, vars="yz"),
      lambda c: 4 * c.powp(-5) * c.u * Y * Z,
      unknown="x_p",
      published={5: 1, 13: -3, 17: 2, 29: 7, 37: -7, 41: 6, 53: 3, 61: 15})
_conj("conj3.8.i.a", "p = 1 (mod 4)", ONE_MOD_4, family("j+k, -1:j-k", ONE_N, vars=""),
      lambda c: c.powp(-1, base=-c.p))
_conj("conj3.8.i.b", "p = 1 (mod 4)", ONE_MOD_4, family("j+k, j-k", ONE_N),
      lambda c: c.powp(-5, base=-c.p) * (c.n**2 * W * X - (c.n * Y - 1) * (c.n * Z - 1)))
_conj("conj3.8.ii", "p = 3 (mod 4), p > 3", lambda p: p % 4 == 3 and p > 3,
      family("j+k, j-k", ONE_N, vars="xyw"),
      lambda c: (-1) ** ((c.h + 1) // 2) * c.powp(-3) * (
          c.n * Y - 1 + (2 - c.L) * c.h * (W + X) - c.L * Fraction(16 * c.u, c.p) * W * X),
      unknown="q_p",
      published={7: 1, 11: 1, 19: 9, 23: 15, 31: 24, 43: 27, 47: 72, 59: 62, 67: 51,
                 71: 259, 79: 82, 83: 18, 103: 349, 107: -68, 127: 478})
_conj("conj3.8.jk", "p > 3", ABOVE_3, family("j+k, j-k, jk", ONE_N, vars=""),
      by_class(lambda c: c.L * c.powp(-5),
               lambda c: c.s * (1 - (2 - c.L) * c.h) * c.powp(-3)))
def c39_three_printed(c):
    """The p = 3 (mod 4) branch exactly as published; it has no y or z terms."""
    return (-1) ** ((c.h + 1) // 2) * c.powp(-7) * (c.p - 2 * c.u * W) * X


def _c39_three(c):
    # the published branch plus 2 m_p (y+2) z inside the bracket; the two agree at y = z = 0
    return (-1) ** ((c.h + 1) // 2) * c.powp(-7) * (c.p * X + 2 * c.u * ((Y + 2) * Z - W * X))


_conj("conj3.9", "p > 3", ABOVE_3, family("j+k, j-k", ZERO_N1),
      by_class(lambda c: c.L * c.powp(-5) * (c.p * X - W * X + (Y + 2) * (Z + 2)),
               _c39_three),
      unknown="m_p",
      published={7: 2, 11: 1, 19: -3, 23: -1, 31: 3, 43: 1, 47: 0, 59: 8})

# ----------------------------------------- conjectures, symbols (j +- k +- 1)

_conj("conj4.1.i", "p > 3", ABOVE_3, family("j+k-1", ONE_N),
      by_class(lambda c: c.L * 2**c.n * ((Y * Z - (W + 1) * X) * c.a
                                         + (W * (1 - X) + (Y + 1) * (Z + 1)) * c.b),
               lambda c: 2**c.n * (Y * Z - (W + 1) * X)))
_conj("conj4.1.ii", "p > 3", ABOVE_3, family("j+k-1", ONE_N1),
      by_class(lambda c: c.L * 2**c.n * (c.p * c.b * ((W + 1) * X - Y * Z)
                                         + c.a * (W * (X - 1) - (Y + 1) * (Z + 1))),
               lambda c: 2**c.n * (W * (1 - X) + (Y + 1) * (Z + 1))))
_conj("conj4.2", "p > 3", ABOVE_3, family("j+k-1", ONE_N2),
      by_class(lambda c: c.L * c.pow2(-5) * (
          ((2 - c.L) * c.a - c.p * c.b) * X
          + (c.a + (c.L - 2) * c.b) * (W + Y + Z + 1)
          + ((c.p - 1) * c.b + (c.L - 1) * (c.a + c.b)) * (Y * Z - W * X)),
               lambda c: c.pow2(-5) * ((c.L - 2) * X - W - Y - Z - 1
                                       + (1 - c.L) * (Y * Z - W * X))))
_conj("conj4.3", "p > 3", ABOVE_3, family("j+k-1", FULL),
      by_class(lambda c: c.L * c.pow2(-3) * (
          (c.p * c.b - 2 * c.a) * (W + Y + Z + 1) + (2 * c.b - c.a) * c.p * X
          + ((c.p - 2) * c.a - c.p * c.b) * (Y * Z - W * X)),
               lambda c: c.pow2(-3) * (2 * W * (1 - X) + 2 * (Y + 1) * (Z + 1)
                                       + c.p * ((W + 1) * X - Y * Z))))
_conj("conj4.4", "p > 3, p = 3 (mod 4)", lambda p: p > 3 and p % 4 == 3, family("j+k-1", ZERO_N1),
      lambda c: c.pow2(-5) * (
          (half * c.p * (2 - c.L) - 4) * X + (half * c.p - 2 - c.L) * (W + Y + Z + 1)
          + (half * c.p * (c.L - 1) + 2 - c.L) * (Y * Z - W * X)))
_conj("conj4.5", "p > 3", ABOVE_3, family("j+k+1", FULL),
      by_class(lambda c: c.L * 2**c.n * c.p * c.b * (X + Fraction(c.p - 2, 2) * (Y * Z - W * X))
               + c.L * 2**c.n * c.a * (W * (X + Fraction(c.p - 2, 2)) - (Y + 1) * (Z + 1)),
               lambda c: 2**c.n * (W * (Fraction(c.p - 2, 2) - X) + (Y + 1) * (Z + 1))))


def _c46_one(c):
    return c.L * c.pow2(-3) * ((c.p * c.b - 2 * c.a) * X + 2 * (c.u + c.b - c.a) * Y * Z
                               + (2 * c.b - c.a - 1) * (Y + Z + 1) + 1)


def _c46_three(c):
    return (c.pow2(-3) * (1 - c.s) * (Y + Z + 2 * (Y * Z - W * X))
            + c.pow2(-3) * ((c.p - 3) * (Y * Z - W * X + half * W) - 2 * X + 1))


# The p = 1 (mod 4) branch carries no w term; the family drops w there.
_F46 = (family("j+k+1", ONE_N, vars="xyz"), family("j+k+1", ONE_N))
_conj("conj4.6", "p > 3", ABOVE_3, lambda p: _F46[p % 4 != 1], by_class(_c46_one, _c46_three),
      unknown="n_p", positive_unknown=True,
      published={5: 1, 13: 11, 17: 39, 29: 68, 37: 230, 41: 1441, 53: 256})

_conj("conj4.7", "p > 3", ABOVE_3, family("j-k+1", FULL),
      by_class(lambda c: (c.p * c.bp - c.ap) * (W * (1 - X) + (Y + 1) * (Z + 1))
               + c.p * (W * X - (Y + 1) * Z + c.L * (c.bp - c.ap) * ((1 + W) * X - Y * Z)),
               lambda c: 1 - c.L * c.p * X + W + Y + (c.p * c.L * c.s - 1) * Z
               + (c.p * c.L * (1 + c.s) - 1) * (Y * Z - W * X)))
_conj("conj4.8", "p > 3", ABOVE_3, family("j-k+1", ZERO_N1),
      by_class(lambda c: (c.p * c.bp - c.ap) * ((W + 1) * X - Y * Z) + c.L * (W * X - (Y + 1) * Z)
               + c.L * (c.bp - c.ap) * (W * (1 - X) + (Y + 1) * (Z + 1)),
               lambda c: X - c.L * (W + Y - Z + 1) - c.s * Z + (1 + c.s - c.L) * (W * X - Y * Z)))
_conj("conj4.9", "p > 3", ABOVE_3, family("j-k+1", ONE_N),
      by_class(lambda c: c.L * c.n * ((Y + 1) * Z - W * X) + (c.p * c.bp - c.ap) * ((W + 1) * X - Y * Z)
               + c.L * (c.bp - c.ap) * (W * (1 - X) + (Y + 1) * (Z + 1)),
               lambda c: (W + 1) * X - Y * Z + c.L * ((Y + 1) * (Z - 1) - W * (X + 1))
               + c.s * Fraction(c.p + 1, 2) * (W * X - (Y + 1) * Z)))


def _residue_check(atoms: str):
    fam = family(atoms, FULL, vars="")

    def check(p, engine):
        d = det_poly(fam.at(p), engine).coeff()
        j = jacobi(2 * d, p)
        return ClaimResult(j == 1, str(d), "(2*det / p) = 1", f"(2*det / p) = {j}")

    return check


for _d1, _d2 in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
    _tag = f"{'p' if _d1 > 0 else 'm'}{'p' if _d2 > 0 else 'm'}"
    register(Identity(f"conj4.10.i.{_tag}", "conjecture", "p = 1 (mod 4)", ONE_MOD_4,
                      check=_residue_check(f"j+k, j-k, {_d1}:j^2{'+' if _d2 > 0 else '-'}k^2")))
register(Identity("conj4.10.ii", "conjecture", "p = 3 (mod 4)", THREE_MOD_4,
                  check=_residue_check("j+k, j^2+k^2")))

# --------------------------------------------------------- {c,d}_n claims


def curly(c: int, d: int, n: int, engine: str = "auto") -> int:
    """det of ((j^2 + c jk + d k^2)/n) over 2 <= j, k <= n-2."""
    fam = family(f"j^2+{c}*j*k+{d}*k^2".replace("+-", "-"), "2..n-2", vars="")
    return det_poly(fam.at(n), engine).coeff()


def _zero(c, d):
    def check(n, engine):
        v = curly(c, d, n, engine)
        return ClaimResult(v == 0, str(v), "0", str(v))

    return check


def _divisible(c, d, power=1, prime_modulus=False):
    def check(n, engine):
        v = curly(c, d, n, engine)
        m = n**power
        return ClaimResult(v % m == 0, str(v), f"0 mod {m}", f"det mod {m} = {v % m}")

    return check


def _phi_divides(n, engine):
    v = curly(3, 2, n, engine)
    f = euler_phi(n) // 2
    return ClaimResult(v % f == 0, str(v), f"0 mod {f}", f"det mod {f} = {v % f}")


def _phi_square(n, engine):
    v = curly(3, 2, n, engine)
    f = euler_phi(n) // 2
    q, r = divmod(v, f)
    x = isqrt_exact(q) if r == 0 else None
    if x is None:
        return ClaimResult(False, str(v), f"{f}*x^2", f"det mod {f} = {r}; quotient {q if r == 0 else '-'}")
    return ClaimResult(True, str(v), f"{f}*x^2", f"x = {x}; det - {f}*x^2 = {v - f * x * x}")


def _jacobi_zero(n, engine):
    v = curly(5, 5, n, engine)
    j = jacobi(v % n, n)
    return ClaimResult(j == 0, str(v), "(det/n) = 0", f"(det/n) = {j}")


def _jacobsthal(n, engine):
    s = jacobsthal_sum(n)
    two = is_sum_of_two_squares(n)
    return ClaimResult((s == 0) == (not two), f"sum = {s}",
                       "sum = 0 iff n is not a sum of two squares",
                       f"sum of two squares: {two}")


def _odd(id, status, condition, applies, check, domain="odd"):
    register(Identity(id, status, condition, applies, domain=domain, check=check))


_odd("thm5.1", "theorem", "n = 1 (mod 4), n > 1", lambda n: n % 4 == 1, _jacobsthal)
_odd("conj5.1.i", "conjecture", "n = 1 (mod 4), not a sum of two squares",
     lambda n: n % 4 == 1 and not is_sum_of_two_squares(n), _zero(3, 2))
_odd("conj5.1.ii", "conjecture", "n = 3 (mod 4)", lambda n: n % 4 == 3, _phi_divides)
_odd("conj5.1.iii", "conjecture", "n = 3 (mod 8)", lambda n: n % 8 == 3, _phi_square)
_odd("conj5.2.i", "conjecture", "prime p = 13, 19 (mod 24)", lambda p: p % 24 in (13, 19),
     _zero(2, 2), domain="prime")
_odd("conj5.2.ii", "conjecture", "prime p = 17, 23 (mod 24)", lambda p: p % 24 in (17, 23),
     _divisible(2, 2), domain="prime")
_odd("conj5.3.i.a", "conjecture", "n = 5 (mod 8)", lambda n: n % 8 == 5, _zero(4, 2))
_odd("conj5.3.i.b", "conjecture", "n = 5 (mod 8)", lambda n: n % 8 == 5, _zero(8, 8))
_odd("conj5.3.ii", "conjecture", "n = 5 (mod 12)", lambda n: n % 12 == 5, _zero(3, 3))
_odd("conj5.4.a", "conjecture", "n = 1 (mod 4), (n/7) = -1",
     lambda n: n % 4 == 1 and jacobi(n, 7) == -1, _zero(42, -7))
_odd("conj5.4.b", "conjecture", "n = 1 (mod 4), (n/7) = -1",
     lambda n: n % 4 == 1 and jacobi(n, 7) == -1, _zero(21, 112))
_odd("conj5.5.i.a", "conjecture", "odd n > 3", lambda n: n > 3, _divisible(2, 3))
_odd("conj5.5.i.b", "conjecture", "odd n > 3, n != +-1 (mod 12)",
     lambda n: n > 3 and n % 12 not in (1, 11), _divisible(2, 3, power=2))
_odd("conj5.5.ii", "conjecture", "odd n > 7", lambda n: n > 7, _divisible(6, 15))
_odd("conj5.6.i", "conjecture", "n = 13, 17 (mod 20), a sum of two squares",
     lambda n: n % 20 in (13, 17) and is_sum_of_two_squares(n), _zero(5, 5))
_odd("conj5.6.ii", "conjecture", "n = 11, 19 (mod 20), or n = 9 (mod 60) and n > 69",
     lambda n: n % 20 in (11, 19) or (n % 60 == 9 and n > 69), _jacobi_zero)
_odd("conj5.7.i", "conjecture", "n = 5 (mod 12), a sum of two squares",
     lambda n: n % 12 == 5 and is_sum_of_two_squares(n), _zero(10, 9))
_odd("conj5.7.ii", "conjecture", "prime p = 11 (mod 12)", lambda p: p % 12 == 11,
     _divisible(10, 9), domain="prime")
_odd("conj5.8.i", "conjecture", "n = 13, 17 (mod 24), a sum of two squares",
     lambda n: n % 24 in (13, 17) and is_sum_of_two_squares(n), _zero(8, 18))
_odd("conj5.8.ii", "conjecture", "prime p = 19 (mod 24)", lambda p: p % 24 == 19,
     _divisible(8, 18, power=2), domain="prime")
_odd("conj5.8.iii", "conjecture", "prime p = 23 (mod 24)", lambda p: p % 24 == 23,
     _divisible(8, 18), domain="prime")

PUBLISHED_TABLES = {
    "conj3.7.ii": "x_p",
    "conj3.8.ii": "q_p",
    "conj3.9": "m_p",
    "conj4.6": "n_p",
}
