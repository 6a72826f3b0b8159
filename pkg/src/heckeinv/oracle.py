"""Explicit irreducible matrix representations of H_n(q), used as ground truth.

The basis of irrep ``g`` is indexed by its diagram chains (standard tableaux).
``g_p`` acts on the span of a chain ``t`` and its partner ``s`` (steps ``p``
and ``p+1`` exchanged) by a 2x2 block whose diagonal is forced by
``L_{p+1} = q^{-1} g_p L_p g_p + g_p``: with ``a`` the q-content at step ``p``
and ``b`` the one at step ``p+1``, the ``t`` entry is ``((q-1) b + q)/(b - a)``.
The off-diagonal pair has product ``x_t x_s + q``; a symmetric split would need
a square root, so the entry pointing to the chain whose step ``p+1`` sits in a
lower row is set to 1.  Chains with steps ``p``, ``p+1`` in one row get ``q``,
in one column ``-1``.

Nothing here is trusted on faith; :func:`verify_relations` checks it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .characters import evaluate_projection, projection_coefficients
from .diagrams import (
    DiagramChain,
    Partition,
    as_partition,
    chains_of,
    fundamental_eigenvalue,
    partitions_of,
    q_content,
    q_content_added,
)
from .errors import ConstructionFailed, NotDivisible, ResidualDenominator
from .hecke import hook_word
from .laurent import RF_ONE, RF_ZERO, LaurentPoly, RationalFunction

__all__ = [
    "Matrix",
    "IrrepMatrices",
    "Report",
    "build_irrep",
    "murphy_matrix",
    "fundamental_invariant_matrix",
    "word_trace",
    "verify_relations",
    "verify_projection",
    "direct_sum",
]

_Q = LaurentPoly.q()


class Matrix:
    """Sparse square matrix, ``rows[i][j]`` holding nonzero entries."""

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int, rows: dict | None = None):
        self.dim = dim
        self.rows = {i: dict(r) for i, r in (rows or {}).items() if r}

    @classmethod
    def identity(cls, dim: int, scale=RF_ONE) -> "Matrix":
        scale = RationalFunction.coerce(scale)
        if scale.is_zero():
            return cls(dim)
        return cls(dim, {i: {i: scale} for i in range(dim)})

    def __getitem__(self, ij):
        i, j = ij
        return self.rows.get(i, {}).get(j, RF_ZERO)

    def __add__(self, other: "Matrix") -> "Matrix":
        out = {i: dict(r) for i, r in self.rows.items()}
        for i, r in other.rows.items():
            row = out.setdefault(i, {})
            for j, v in r.items():
                s = row.get(j, RF_ZERO) + v
                if s.is_zero():
                    row.pop(j, None)
                else:
                    row[j] = s
        return Matrix(self.dim, out)

    def __neg__(self):
        return self.scale(RationalFunction.coerce(-1))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = RationalFunction.coerce(c)
        if c.is_zero():
            return Matrix(self.dim)
        return Matrix(self.dim, {i: {j: v * c for j, v in r.items()} for i, r in self.rows.items()})

    def __matmul__(self, other: "Matrix") -> "Matrix":
        out = {}
        for i, r in self.rows.items():
            row: dict = {}
            for k, a in r.items():
                for j, b in other.rows.get(k, {}).items():
                    s = row.get(j, RF_ZERO) + a * b
                    if s.is_zero():
                        row.pop(j, None)
                    else:
                        row[j] = s
            if row:
                out[i] = row
        return Matrix(self.dim, out)

    def trace(self) -> RationalFunction:
        total = RF_ZERO
        for i, r in self.rows.items():
            if i in r:
                total = total + r[i]
        return total

    def is_zero(self) -> bool:
        return not self.rows

    def is_diagonal(self) -> bool:
        return all(set(r) <= {i} for i, r in self.rows.items())

    def diagonal(self) -> list[RationalFunction]:
        return [self[i, i] for i in range(self.dim)]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.dim == other.dim and (self - other).is_zero()

    __hash__ = None

    def specialize(self, q0) -> list[list]:
        """Dense matrix of exact rationals at ``q = q0``."""
        return [[self[i, j].eval_at(q0) for j in range(self.dim)] for i in range(self.dim)]

    def __repr__(self):
        return f"Matrix(dim={self.dim}, nnz={sum(len(r) for r in self.rows.values())})"


@dataclass(frozen=True)
class IrrepMatrices:
    shape: Partition
    dim: int
    generators: tuple[Matrix, ...]
    basis: tuple[DiagramChain, ...]

    @property
    def n(self) -> int:
        return self.shape.n


def _rf(x) -> RationalFunction:
    return RationalFunction.coerce(x)


def build_irrep(g) -> IrrepMatrices:
    """Seminormal-form matrices of ``g_1 .. g_{n-1}`` in the chain basis of ``g``."""
    g = as_partition(g)
    basis = tuple(chains_of(g))
    index = {c.added_boxes: k for k, c in enumerate(basis)}
    n = g.n
    gens = []
    for p in range(1, n):
        rows: dict = {}
        for t, chain in enumerate(basis):
            (r1, c1), (r2, c2) = chain.box(p), chain.box(p + 1)
            if r1 == r2:
                rows.setdefault(t, {})[t] = _rf(_Q)
                continue
            if c1 == c2:
                rows.setdefault(t, {})[t] = _rf(-1)
                continue
            partner = chain.swapped(p)
            s = index.get(partner.added_boxes) if partner else None
            if s is None:
                raise ConstructionFailed(f"no partner for chain {chain.added_boxes} at step {p}")
            a, b = q_content(c1 - r1), q_content(c2 - r2)
            x_t = RationalFunction(b * (_Q - 1) + _Q, b - a)
            x_s = RationalFunction(a * (_Q - 1) + _Q, a - b)
            rows.setdefault(t, {})[t] = x_t
            # column t of the matrix is the image of basis vector t
            off = RF_ONE if r2 > r1 else x_t * x_s + _Q
            if off.is_zero():
                raise ConstructionFailed(f"degenerate block at step {p}")
            rows.setdefault(s, {})[t] = off
        gens.append(Matrix(len(basis), rows))
    return IrrepMatrices(g, len(basis), tuple(gens), basis)


def _word_matrix(m: IrrepMatrices, w: Iterable[int]) -> Matrix:
    out = Matrix.identity(m.dim)
    for i in w:
        out = out @ m.generators[i - 1]
    return out


def murphy_matrix(m: IrrepMatrices, p: int) -> Matrix:
    """``L_p = sum_{i<p} q^{1-p+i} g_i ... g_{p-1} ... g_i`` as a matrix."""
    if not 2 <= p <= m.n:
        raise IndexError(f"Murphy index {p} outside 2..{m.n}")
    total = Matrix(m.dim)
    for i in range(1, p):
        total = total + _word_matrix(m, hook_word(i, p)).scale(LaurentPoly.monomial(1 - p + i))
    return total


def murphy_matrix_recursive(m: IrrepMatrices, p: int) -> Matrix:
    """``L_p`` from ``L_2 = g_1`` and ``L_{k+1} = q^{-1} g_k L_k g_k + g_k``."""
    if not 2 <= p <= m.n:
        raise IndexError(f"Murphy index {p} outside 2..{m.n}")
    L = m.generators[0]
    for k in range(2, p):
        G = m.generators[k - 1]
        L = (G @ L @ G).scale(LaurentPoly.monomial(-1)) + G
    return L


def fundamental_invariant_matrix(m: IrrepMatrices) -> Matrix:
    """``C_n``: hooks ``g_i .. g_{i+j} .. g_i`` weighted by ``q^{-j}``."""
    total = Matrix(m.dim)
    n = m.n
    for j in range(n - 1):
        weight = LaurentPoly.monomial(-j)
        for i in range(1, n - j):
            total = total + _word_matrix(m, hook_word(i, i + j + 1)).scale(weight)
    return total


def _apply(m: IrrepMatrices, w: Sequence[int], vec: dict) -> dict:
    for i in reversed(w):
        G = m.generators[i - 1]
        out: dict = {}
        cols = _columns(G)
        for k, v in vec.items():
            for r, a in cols.get(k, {}).items():
                s = out.get(r, RF_ZERO) + a * v
                if s.is_zero():
                    out.pop(r, None)
                else:
                    out[r] = s
        vec = out
    return vec


_COLS: dict = {}


def _columns(G: Matrix) -> dict:
    key = id(G)
    hit = _COLS.get(key)
    if hit is not None and hit[0] is G:
        return hit[1]
    cols: dict = {}
    for i, r in G.rows.items():
        for j, v in r.items():
            cols.setdefault(j, {})[i] = v
    _COLS[key] = (G, cols)
    return cols


def word_trace(m: IrrepMatrices, w: Sequence[int]) -> LaurentPoly:
    """Trace of ``g_{w1} g_{w2} ...``; must clear to a Laurent polynomial."""
    w = tuple(w)
    if any(not 1 <= i < m.n for i in w):
        raise IndexError(f"letters of {w} must lie in 1..{m.n - 1}")
    total = RF_ZERO
    for t in range(m.dim):
        total = total + _apply(m, w, {t: RF_ONE}).get(t, RF_ZERO)
    try:
        return total.to_laurent()
    except NotDivisible:
        raise ResidualDenominator(f"trace of {w} in {m.shape} is {total}") from None


@dataclass
class Report:
    """Outcome of a batch of identity checks, one record per identity."""

    subject: str
    records: list = field(default_factory=list)

    def add(self, check: str, ok: bool, **detail):
        self.records.append({"check": check, "ok": bool(ok), **detail})

    @property
    def ok(self) -> bool:
        return all(r["ok"] for r in self.records)

    @property
    def failures(self) -> list:
        return [r for r in self.records if not r["ok"]]

    def to_json(self) -> dict:
        return {"subject": self.subject, "ok": self.ok, "records": self.records}

    def __str__(self):
        return json.dumps(self.to_json(), indent=2)


def verify_relations(m: IrrepMatrices) -> Report:
    """Check the Hecke relations, Murphy diagonality and scalar ``C_n`` exactly."""
    rep = Report(f"irrep {m.shape}")
    G = m.generators
    I = Matrix.identity(m.dim)
    k = len(G)
    for i in range(k):
        lhs = G[i] @ G[i]
        rhs = G[i].scale(_Q - 1) + I.scale(_Q)
        rep.add("quadratic", lhs == rhs, i=i + 1)
    for i in range(k - 1):
        ok = G[i] @ G[i + 1] @ G[i] == G[i + 1] @ G[i] @ G[i + 1]
        rep.add("braid", ok, i=i + 1)
    for i in range(k):
        for j in range(i + 2, k):
            rep.add("commute", G[i] @ G[j] == G[j] @ G[i], i=i + 1, j=j + 1)
    for p in range(2, m.n + 1):
        L = murphy_matrix(m, p)
        expected = [q_content_added(c, p) for c in m.basis]
        ok = L.is_diagonal() and all(d == e for d, e in zip(L.diagonal(), expected))
        rep.add("murphy_diagonal", ok, p=p)
        rep.add("murphy_recursion", L == murphy_matrix_recursive(m, p), p=p)
    if m.n >= 2:
        C = fundamental_invariant_matrix(m)
        lam = fundamental_eigenvalue(m.shape)
        rep.add("fundamental_scalar", C == I.scale(lam), eigenvalue=str(lam))
    return rep


def direct_sum(blocks: Sequence[Matrix]) -> Matrix:
    rows: dict = {}
    offset = 0
    for b in blocks:
        for i, r in b.rows.items():
            rows[i + offset] = {j + offset: v for j, v in r.items()}
        offset += b.dim
    return Matrix(offset, rows)


def _matrix_polynomial(coeffs: Sequence[RationalFunction], X: Matrix) -> Matrix:
    acc = Matrix(X.dim)
    I = Matrix.identity(X.dim)
    for c in reversed(coeffs):
        acc = acc @ X + I.scale(c)
    return acc


def verify_projection(shapes: Sequence) -> Report:
    """Evaluate every ``P_g(C_n)`` on the direct sum of the given irreps.

    Each projection must be the identity on blocks of its own shape and zero
    elsewhere; the projections over all partitions of ``n`` sum to the identity.
    """
    shapes = [as_partition(s) for s in shapes]
    n = shapes[0].n
    if any(s.n != n for s in shapes):
        raise ValueError("all shapes must have the same size")
    irreps = [build_irrep(s) for s in shapes]
    C = direct_sum([fundamental_invariant_matrix(m) for m in irreps])
    rep = Report("projections " + " + ".join(map(str, shapes)))
    total = Matrix(C.dim)
    for g in partitions_of(n):
        P = _matrix_polynomial(projection_coefficients(n, g), C)
        total = total + P
        expected = direct_sum(
            [Matrix.identity(m.dim) if m.shape == g else Matrix(m.dim) for m in irreps]
        )
        rep.add("projection_blocks", P == expected, shape=str(g))
    rep.add("partition_of_unity", total == Matrix.identity(C.dim))
    return rep


def scalar_projection(n: int, g, x) -> RationalFunction:
    return evaluate_projection(projection_coefficients(n, g), x)
