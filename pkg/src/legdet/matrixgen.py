"""Symbol matrices built from quadratic atoms plus rank-one perturbations.

An entry at (j, k) is

    sum_i c_i * (Q_i(j, k) / n) + x + y (j/n) + z (k/n) + w (jk/n)

with each Q_i a quadratic in j, k. Ranges are written as expressions in the
modulus (``p`` or ``n``), e.g. ``0..(p-1)/2``, and resolved per modulus.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

import numpy as np

from .arith import jacobi, symbol_table

VARIABLES = ("x", "y", "z", "w")


@dataclass(frozen=True)
class Atom:
    """alpha j^2 + beta jk + gamma k^2 + delta j + eps_coef k + zeta."""

    alpha: int = 0
    beta: int = 0
    gamma: int = 0
    delta: int = 0
    eps_coef: int = 0
    zeta: int = 0

    def __post_init__(self):
        if not any(self.coefficients()):
            raise ValueError("atom with all coefficients zero")

    def coefficients(self) -> tuple[int, ...]:
        return (self.alpha, self.beta, self.gamma, self.delta, self.eps_coef, self.zeta)

    def __call__(self, j, k):
        return (self.alpha * j * j + self.beta * j * k + self.gamma * k * k
                + self.delta * j + self.eps_coef * k + self.zeta)

    @classmethod
    def parse(cls, text: str) -> Atom:
        """Parse a quadratic in j, k such as ``j^2+3*j*k+2*k^2`` or ``j-k+1``."""
        poly = _eval_poly(text.replace("^", "**"), {"j": {(1, 0): 1}, "k": {(0, 1): 1}})
        keys = {(2, 0): "alpha", (1, 1): "beta", (0, 2): "gamma",
                (1, 0): "delta", (0, 1): "eps_coef", (0, 0): "zeta"}
        kwargs = {}
        for mono, coef in poly.items():
            if mono not in keys:
                raise ValueError(f"atom {text!r} has degree above 2")
            if coef.denominator != 1:
                raise ValueError(f"atom {text!r} has a non-integer coefficient")
            kwargs[keys[mono]] = int(coef)
        return cls(**kwargs)

    def __str__(self) -> str:
        terms = []
        for coef, mono in zip(self.coefficients(), ("j^2", "j*k", "k^2", "j", "k", "")):
            if coef:
                body = mono if abs(coef) == 1 and mono else f"{abs(coef)}*{mono}" if mono else str(abs(coef))
                terms.append(("-" if coef < 0 else "+") + body)
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s


def _eval_poly(text: str, names: Mapping[str, dict]) -> dict[tuple, Fraction]:
    """Evaluate an arithmetic expression into a sparse polynomial dict."""

    def add(p, q, sign=1):
        out = dict(p)
        for m, c in q.items():
            out[m] = out.get(m, 0) + sign * c
        return {m: c for m, c in out.items() if c}

    def mul(p, q):
        out: dict = {}
        for m1, c1 in p.items():
            for m2, c2 in q.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return {m: c for m, c in out.items() if c}

    width = len(next(iter(next(iter(names.values())))))
    one = (0,) * width

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return {one: Fraction(node.value)} if node.value else {}
        if isinstance(node, ast.Name):
            if node.id in names:
                return {m: Fraction(c) for m, c in names[node.id].items()}
            raise ValueError(f"unknown name {node.id!r}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            inner = walk(node.operand)
            return {m: -c for m, c in inner.items()} if isinstance(node.op, ast.USub) else inner
        if isinstance(node, ast.BinOp):
            left, right = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return add(left, right)
            if isinstance(node.op, ast.Sub):
                return add(left, right, -1)
            if isinstance(node.op, ast.Mult):
                return mul(left, right)
            if isinstance(node.op, ast.Div):
                if set(right) - {one}:
                    raise ValueError("division by a non-constant")
                d = right.get(one, 0)
                return {m: c / d for m, c in left.items()}
            if isinstance(node.op, ast.Pow):
                if set(right) - {one} or right.get(one, 0).denominator != 1 or right.get(one, 0) < 0:
                    raise ValueError("exponent must be a nonnegative integer constant")
                out = {one: Fraction(1)}
                for _ in range(int(right.get(one, 0))):
                    out = mul(out, left)
                return out
        raise ValueError(f"unsupported syntax in {text!r}")

    # "jk" is accepted as shorthand for j*k
    text = re.sub(r"(?<![A-Za-z_])jk(?![A-Za-z_])", "(j*k)", text)
    text = re.sub(r"(\d)\s*(?=[A-Za-z(])", r"\1*", text)
    text = re.sub(r"\)\s*(?=[A-Za-z(\d])", ")*", text)
    return walk(ast.parse(text, mode="eval"))


def eval_bound(expr: str | int, n: int) -> int:
    """Evaluate an affine range bound such as ``(p-1)/2`` at modulus n."""
    if isinstance(expr, int):
        return expr
    poly = _eval_poly(expr, {"p": {(1,): 1}, "n": {(1,): 1}})
    value = sum(c * n ** m[0] for m, c in poly.items())
    if Fraction(value).denominator != 1:
        raise ValueError(f"bound {expr!r} is not an integer at n={n}")
    return int(value)


@dataclass(frozen=True)
class MatrixSpec:
    """One concrete square matrix family at a fixed odd modulus."""

    modulus: int
    rows: tuple[int, int]
    cols: tuple[int, int]
    atoms: tuple[tuple[int, Atom], ...] = ()
    vars: tuple[str, ...] = ()

    def __post_init__(self):
        if self.modulus < 3 or self.modulus % 2 == 0:
            raise ValueError(f"modulus must be odd and > 1, got {self.modulus}")
        if self.size != max(0, self.cols[1] - self.cols[0] + 1):
            raise ValueError("row and column ranges differ in length")
        bad = set(self.vars) - set(VARIABLES)
        if bad:
            raise ValueError(f"unknown variables {sorted(bad)}")
        object.__setattr__(self, "vars", tuple(v for v in VARIABLES if v in self.vars))

    @property
    def size(self) -> int:
        return max(0, self.rows[1] - self.rows[0] + 1)

    def row_indices(self) -> np.ndarray:
        return np.arange(self.rows[0], self.rows[1] + 1, dtype=np.int64)

    def col_indices(self) -> np.ndarray:
        return np.arange(self.cols[0], self.cols[1] + 1, dtype=np.int64)

    def to_text(self) -> str:
        parts = [f"n={self.modulus}", f"rows={self.rows[0]}..{self.rows[1]}",
                 f"cols={self.cols[0]}..{self.cols[1]}"]
        for coef, atom in self.atoms:
            parts.append(f"atom={atom}" if coef == 1 else f"atom={coef}:{atom}")
        parts.append("vars=" + ",".join(self.vars))
        return "; ".join(parts)


@dataclass(frozen=True)
class Family:
    """A MatrixSpec template whose ranges are expressions in the modulus."""

    atoms: tuple[tuple[int, Atom], ...]
    rows: tuple[str | int, str | int]
    cols: tuple[str | int, str | int] | None = None
    vars: tuple[str, ...] = VARIABLES

    def at(self, n: int) -> MatrixSpec:
        cols = self.cols or self.rows
        return MatrixSpec(
            modulus=n,
            rows=(eval_bound(self.rows[0], n), eval_bound(self.rows[1], n)),
            cols=(eval_bound(cols[0], n), eval_bound(cols[1], n)),
            atoms=self.atoms,
            vars=tuple(self.vars),
        )


def family(atoms: str | list, rows: str, cols: str | None = None, vars: str = "xyzw") -> Family:
    """Compact constructor: ``family("j+k, -1:j-k", "0..(p-1)/2", vars="yz")``."""
    if isinstance(atoms, str):
        atoms = [a for a in (s.strip() for s in atoms.split(",")) if a]
    parsed = []
    for item in atoms:
        if isinstance(item, tuple):
            coef, body = item
            parsed.append((coef, body if isinstance(body, Atom) else Atom.parse(body)))
            continue
        coef, _, body = item.rpartition(":")
        parsed.append((int(coef) if coef else 1, Atom.parse(body)))

    def rng(text):
        lo, hi = text.split("..")
        return (lo.strip(), hi.strip())

    return Family(tuple(parsed), rng(rows), rng(cols) if cols else None, tuple(vars))


def parse_spec(text: str) -> MatrixSpec:
    """Parse ``n=13; rows=0..(n-1)/2; cols=...; atom=j+k; vars=x,y``.

    ``p`` is an alias of ``n``; ``range`` sets rows and cols together;
    ``atom`` may repeat and takes an optional integer weight, ``atom=-1:j-k``.
    """
    fields: dict[str, str] = {}
    atoms: list[str] = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        key, sep, value = part.partition("=")
        key, value = key.strip(), value.strip()
        if not sep:
            raise ValueError(f"malformed field {part!r}")
        if key == "atom":
            atoms.append(value)
        elif key in ("n", "p", "rows", "cols", "range", "vars"):
            fields["n" if key == "p" else key] = value
        else:
            raise ValueError(f"unknown field {key!r}")
    if "n" not in fields:
        raise ValueError("spec needs n=<odd modulus>")
    n = int(fields["n"])
    rows = fields.get("rows", fields.get("range"))
    if rows is None:
        raise ValueError("spec needs rows= or range=")
    cols = fields.get("cols", fields.get("range", rows))
    names = fields.get("vars", "").replace(",", " ").split()
    return family(atoms, rows, cols, vars=tuple(names)).at(n)


@dataclass(frozen=True)
class FamilyDecomposition:
    base: np.ndarray
    ones: np.ndarray
    u: np.ndarray
    v: np.ndarray
    vars: tuple[str, ...] = field(default=())

    def assemble(self, assign: Mapping[str, int]) -> np.ndarray:
        _check_assignment(self.vars, assign)
        get = {v: int(assign[v]) for v in self.vars}
        m = self.base.astype(object) if _wide(get) else self.base.copy()
        if "x" in get:
            m = m + get["x"]
        if "y" in get:
            m = m + get["y"] * self.u[:, None]
        if "z" in get:
            m = m + get["z"] * self.v[None, :]
        if "w" in get:
            m = m + get["w"] * np.outer(self.u, self.v)
        return m


def _wide(assign: Mapping[str, int]) -> bool:
    return any(abs(v) >= 2**40 for v in assign.values())


def _check_assignment(names, assign) -> None:
    missing = [v for v in names if v not in assign]
    if missing:
        raise KeyError(f"no value for variables {missing}")


def base_matrix(spec: MatrixSpec) -> np.ndarray:
    n = spec.modulus
    table = symbol_table(n)
    j = spec.row_indices()[:, None]
    k = spec.col_indices()[None, :]
    m = np.zeros((spec.size, spec.size), dtype=np.int64)
    for coef, atom in spec.atoms:
        m += coef * table[atom(j % n, k % n) % n]
    return m


def decompose(spec: MatrixSpec) -> FamilyDecomposition:
    table = symbol_table(spec.modulus)
    n = spec.modulus
    return FamilyDecomposition(
        base=base_matrix(spec),
        ones=np.ones(spec.size, dtype=np.int64),
        u=table[spec.row_indices() % n].copy(),
        v=table[spec.col_indices() % n].copy(),
        vars=spec.vars,
    )


def build_numeric(spec: MatrixSpec, assign: Mapping[str, int] | None = None) -> np.ndarray:
    """The matrix of ``spec`` with its variables set to integers."""
    return decompose(spec).assemble(assign or {})


def build_entrywise(spec: MatrixSpec, assign: Mapping[str, int] | None = None) -> list[list[int]]:
    """Slow entry-by-entry construction straight from the definition."""
    assign = assign or {}
    _check_assignment(spec.vars, assign)
    n = spec.modulus
    val = {v: assign.get(v, 0) if v in spec.vars else 0 for v in VARIABLES}
    out = []
    for j in range(spec.rows[0], spec.rows[1] + 1):
        row = []
        for k in range(spec.cols[0], spec.cols[1] + 1):
            e = sum(c * jacobi(atom(j, k), n) for c, atom in spec.atoms)
            e += val["x"] + val["y"] * jacobi(j, n) + val["z"] * jacobi(k, n) + val["w"] * jacobi(j * k, n)
            row.append(e)
        out.append(row)
    return out


def chapman_matrix(p: int, variant: str, x: int) -> np.ndarray:
    """[x + ((j+k-1)/p)] over 1..(p-1)/2 (``C``) or 1..(p+1)/2 (``C_star``)."""
    top = {"C": "(p-1)/2", "C_star": "(p+1)/2"}[variant]
    spec = family("j+k-1", f"1..{top}", vars="x").at(p)
    return build_numeric(spec, {"x": x})
