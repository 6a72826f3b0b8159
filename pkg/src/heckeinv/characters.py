"""Characters of H_n(q) from traces of non-consecutive Murphy products.

The pipeline:

1. Murphy traces ``tr(L_A)`` for non-consecutive index sets ``A`` come from
   :mod:`heckeinv.murphy` (pure diagram combinatorics).
2. For every class type ``nu`` the product ``L_{A(nu)}``, with ``A(nu)`` the
   top indices of the runs of the class word, is expanded in the standard
   basis and reduced to class-representative traces.  This yields a
   triangular system ``tr(L_{A(nu)}) = sum_mu M[nu, mu] tr(T_mu)``.
3. Inverting that system writes ``tr(T_mu)`` as a combination of Murphy
   traces with coefficients rational in ``q`` that depend only on the
   non-trivial parts of ``mu`` (not on ``n``).

The closed forms for single cycles, single cuts and overlapping hooks are
exposed as well; they are checked against the general route and the matrix
oracle.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence

from . import hecke
from .diagrams import Partition, as_partition, fundamental_eigenvalue, partitions_of
from .errors import (
    ConsecutiveIndices,
    DegenerateEigenvalues,
    SizeMismatch,
    UnreducibleWord,
)
from .laurent import (
    RF_ONE,
    RF_ZERO,
    LaurentPoly,
    RationalFunction,
    exact_div,
    f_coeff,
    poly_gcd,
)
from .murphy import murphy_index_list, murphy_product_trace, murphy_trace

__all__ = [
    "GWord",
    "SegmentShape",
    "CharacterTable",
    "class_word",
    "murphy_expansion",
    "single_cycle_trace",
    "cycle_times_murphy_trace",
    "v_reduction",
    "overlap_reduction",
    "reduce_word_trace",
    "class_character",
    "character_table",
    "projection_coefficients",
]

GWord = tuple[int, ...]

_Q = LaurentPoly.q()
_QM1 = _Q - 1


@dataclass(frozen=True)
class SegmentShape:
    """Cycle lengths of the connected runs of a standard word, inside ``H_n``.

    A run of ``k`` letters counts as length ``k + 1``; only lengths >= 2 are
    stored, the rest of ``n`` is fixed points.
    """

    lengths: tuple[int, ...]
    n: int

    def __post_init__(self):
        lengths = tuple(sorted((int(x) for x in self.lengths if x > 1), reverse=True))
        if sum(lengths) > self.n:
            raise ValueError(f"segments {lengths} do not fit in n={self.n}")
        object.__setattr__(self, "lengths", lengths)

    def partition(self) -> Partition:
        return Partition(self.lengths + (1,) * (self.n - sum(self.lengths)))

    @classmethod
    def of_partition(cls, mu) -> "SegmentShape":
        mu = as_partition(mu)
        return cls(mu.parts, mu.n)

    @classmethod
    def of_word(cls, w: Sequence[int], n: int) -> "SegmentShape":
        runs = standard_runs(w)
        if runs is None:
            raise UnreducibleWord(f"{w} is not a product of disjoint ascending runs")
        return cls(tuple(b - a + 2 for a, b in runs), n)


def standard_runs(w: Sequence[int]) -> list[tuple[int, int]] | None:
    """Split ``w`` into ascending runs ``(first, last)`` separated by cuts.

    Returns ``None`` unless consecutive runs leave at least one index out.
    """
    runs: list[tuple[int, int]] = []
    for i in w:
        if runs and i == runs[-1][1] + 1:
            runs[-1] = (runs[-1][0], i)
        elif not runs or i >= runs[-1][1] + 2:
            runs.append((i, i))
        else:
            return None
    return runs


def class_word(mu, n: int | None = None) -> GWord:
    """Minimal-length representative of class ``mu``: one ascending run per part."""
    mu = as_partition(mu)
    if n is not None and mu.n != n:
        raise SizeMismatch(f"{mu} is not a partition of {n}")
    word: list[int] = []
    s = 0
    for part in mu.parts:
        word.extend(range(s + 1, s + part))
        s += part
    return tuple(word)


def _top_indices(mu: Partition) -> tuple[int, ...]:
    out, s = [], 0
    for part in mu.parts:
        if part > 1:
            s += part
            out.append(s)
    return tuple(out)


def _reduced_class(mu: Partition) -> Partition:
    return Partition(tuple(p for p in mu.parts if p > 1))


def _solve(matrix: dict, order: list) -> dict:
    """Invert a square sparse matrix ``{row: {col: RF}}`` by Gauss-Jordan.

    Returns ``inv`` with ``inv[col][row]`` so that ``x[col] = sum_row inv[col][row] * t[row]``
    solves ``t[row] = sum_col matrix[row][col] * x[col]``.
    """
    rows = {r: (dict(matrix[r]), {r: RF_ONE}) for r in order}
    pivots: dict = {}
    remaining = list(order)
    while remaining:
        # sparsest row first keeps the fill-in of the triangular system at zero
        remaining.sort(key=lambda r: (len(rows[r][0]), order.index(r)))
        r = remaining.pop(0)
        lhs, rhs = rows[r]
        if not lhs:
            raise ArithmeticError("singular Murphy trace system")
        col = min(lhs, key=lambda c: order.index(c))
        inv = lhs[col].inverse()
        lhs = {c: v * inv for c, v in lhs.items()}
        rhs = {c: v * inv for c, v in rhs.items()}
        rows[r] = (lhs, rhs)
        pivots[col] = r
        for other in list(rows):
            if other == r:
                continue
            o_lhs, o_rhs = rows[other]
            f = o_lhs.get(col)
            if f is None:
                continue
            for c, v in lhs.items():
                s = o_lhs.get(c, RF_ZERO) - f * v
                if s.is_zero():
                    o_lhs.pop(c, None)
                else:
                    o_lhs[c] = s
            for c, v in rhs.items():
                s = o_rhs.get(c, RF_ZERO) - f * v
                if s.is_zero():
                    o_rhs.pop(c, None)
                else:
                    o_rhs[c] = s
    return {col: rows[r][1] for col, r in pivots.items()}


@lru_cache(maxsize=None)
def _expansions(m: int) -> dict:
    """Murphy expansions of every class of ``S_m`` (indices may include all classes)."""
    cp = hecke.class_polynomials(m)
    ident = {hecke.identity(m): LaurentPoly.const(1)}
    matrix: dict = {}
    classes = partitions_of(m)
    for nu in classes:
        x = ident
        for a in _top_indices(nu):
            x = hecke.mul(x, hecke.murphy_element(a, m))
        matrix[nu] = {mu: RationalFunction.coerce(f) for mu, f in cp.trace(x).items()}
    inv = _solve(matrix, classes)
    return {
        mu: {_top_indices(nu): coeff for nu, coeff in row.items()}
        for mu, row in inv.items()
    }


def murphy_expansion(mu) -> dict[tuple[int, ...], RationalFunction]:
    """Coefficients ``c_A`` with ``tr(T_mu) = sum_A c_A tr(L_A)`` in every irrep.

    Only the parts of ``mu`` larger than one matter, so the expansion is the
    same for ``mu`` and ``mu + (1,)``.
    """
    core = _reduced_class(as_partition(mu))
    if core.n == 0:
        return {(): RF_ONE}
    return dict(_expansions(core.n)[core])


@lru_cache(maxsize=None)
def _cleared_expansion(core: Partition) -> tuple[LaurentPoly, tuple]:
    # one common denominator D, so each character is a Laurent sum divided by D
    expansion = murphy_expansion(core)
    common = LaurentPoly.const(1)
    for c in expansion.values():
        common = common * exact_div(c.den, poly_gcd(common, c.den))
    terms = tuple((idx, c.num * exact_div(common, c.den)) for idx, c in expansion.items())
    return common, terms


@lru_cache(maxsize=None)
def _class_character(g: Partition, shape: SegmentShape) -> LaurentPoly:
    common, terms = _cleared_expansion(_reduced_class(shape.partition()))
    total = LaurentPoly()
    for idx, num in terms:
        total = total + num * murphy_product_trace(g, idx)
    return exact_div(total, common)


def class_character(g, mu) -> LaurentPoly:
    """Character of the irrep ``g`` at the class of cycle type ``mu``."""
    g, mu = as_partition(g), as_partition(mu)
    if g.n != mu.n:
        raise SizeMismatch(f"|{g}| = {g.n} but |{mu}| = {mu.n}")
    return _class_character(g, SegmentShape.of_partition(mu))


def _shape_character(g: Partition, lengths: Iterable[int]) -> LaurentPoly:
    return _class_character(g, SegmentShape(tuple(lengths), g.n))


# --- closed forms ------------------------------------------------------------

def _inversion_sum(k: int, trace_of) -> LaurentPoly:
    # (q/(q-1))^{k-2} sum_i (-1)^i C(k-1, i) trace_of(k - i)
    s = LaurentPoly()
    for i in range(k - 1):
        s = s + trace_of(k - i) * ((-1) ** i * comb(k - 1, i))
    return exact_div(s.shift(k - 2), _QM1 ** (k - 2))


def single_cycle_trace(g, k: int) -> LaurentPoly:
    """``tr(g_1 g_2 ... g_{k-1})`` from the traces of ``L_2 .. L_k``."""
    g = as_partition(g)
    if not 2 <= k <= g.n:
        raise ValueError(f"cycle length {k} outside 2..{g.n}")
    return _inversion_sum(k, lambda j: murphy_trace(g, j))


def cycle_times_murphy_trace(g, k: int, m: int) -> LaurentPoly:
    """``tr((g_1 ... g_{k-1}) L_m)`` for ``m >= k + 2``."""
    g = as_partition(g)
    if not 2 <= k <= g.n:
        raise ValueError(f"cycle length {k} outside 2..{g.n}")
    murphy_index_list((k, m), g.n)
    if m < k:
        raise ConsecutiveIndices(f"L_{m} must sit above the run ending at {k}")
    return _inversion_sum(k, lambda j: murphy_product_trace(g, (j, m)))


def _run(a: int, b: int) -> GWord:
    return tuple(range(a, b + 1))


def v_word(k: int, p: int, r: int) -> GWord:
    """``(g_1..g_{k-1})(g_{k+1}..g_p)(g_{p+1}..g_{p+r}..g_{p+1})``; for ``k = 0`` the first run is empty."""
    first = _run(1, k - 1) if k >= 1 else ()
    second = _run(k + 1, p)
    return first + second + hecke.hook_word(p + 1, p + r + 1)


def v_reduction(k: int, p: int, r: int) -> list[tuple[LaurentPoly, GWord]]:
    """Expand ``V_k`` into standard two-run words.

    ``sum_{l<r} C(r-1, l) q^l (q-1)^{r-l-1} tr((g_1..g_{k-1})(g_{k+1}..g_{p+r-l}))``.
    """
    if r < 1:
        raise ValueError("hook span r must be >= 1")
    if k < 0 or p < k:
        raise ValueError(f"need 0 <= k <= p, got k={k}, p={p}")
    first = _run(1, k - 1) if k >= 1 else ()
    out = []
    for l in range(r):
        coeff = _Q**l * _QM1 ** (r - l - 1) * comb(r - 1, l)
        out.append((coeff, first + _run(k + 1, p + r - l)))
    return out


def overlap_word(p: int, l: int, r: int) -> GWord:
    """``(g_1 ... g_p)(g_l ... g_{p+r} ... g_l)``."""
    return _run(1, p) + hecke.hook_word(l, p + r + 1)


def overlap_reduction(p: int, l: int, r: int) -> list[tuple[LaurentPoly, int]]:
    """Expand an overlapping hook into ``V_k`` terms, returned as ``(coeff, k)``.

    ``(q-1) sum_{k=1}^{v} q^k f_{2(v-k)+1} V_k + f_{2v+1} V_0`` with overlap
    length ``v = p - l + 1``; the coefficients depend on the overlap only.
    """
    if not 1 <= l <= p:
        raise ValueError(f"need 1 <= l <= p, got l={l}, p={p}")
    if r < 1:
        raise ValueError("hook must reach past the run (r >= 1)")
    v = p - l + 1
    out = [(_QM1 * _Q**k * f_coeff(2 * (v - k) + 1), k) for k in range(1, v + 1)]
    out.append((f_coeff(2 * v + 1), 0))
    return out


def _split_hook(w: GWord):
    """Split ``w`` into standard runs plus a trailing palindromic hook."""
    runs = standard_runs(w)
    if runs is not None:
        return runs, None
    for size in range(3, len(w) + 1, 2):
        tail = w[len(w) - size:]
        half = size // 2
        lo = tail[0]
        if tail != hecke.hook_word(lo, lo + half + 1):
            continue
        runs = standard_runs(w[: len(w) - size])
        if runs is not None:
            return runs, (lo, lo + half)
    raise UnreducibleWord(f"{w} is neither standard runs nor runs followed by one hook")


def _expand_hooked(g: Partition, runs, hook) -> LaurentPoly:
    lo, top = hook  # hook g_lo .. g_top .. g_lo
    shift = min([lo] + [a for a, _ in runs]) - 1
    runs = [(a - shift, b - shift) for a, b in runs]
    lo, top = lo - shift, top - shift

    def standard(word) -> LaurentPoly:
        return _shape_character(g, (b - a + 2 for a, b in standard_runs(word)))

    def v_value(k, p, r) -> LaurentPoly:
        return sum((c * standard(w) for c, w in v_reduction(k, p, r)), LaurentPoly())

    if not runs and lo == 1:
        return v_value(0, 0, top)
    if len(runs) == 1 and runs[0][0] == 1:
        p = runs[0][1]
        r = top - p
        if lo == p + 1:
            return v_value(0, p, r)
        if lo <= p and r >= 1:
            return sum(
                (c * v_value(k, p, r) for c, k in overlap_reduction(p, lo, r)), LaurentPoly()
            )
    if len(runs) == 2 and runs[0][0] == 1 and lo == runs[1][1] + 1:
        (a1, b1), (a2, b2) = runs
        if a2 == b1 + 2:
            return v_value(a2 - 1, b2, top - b2)
    word = sum((_run(a, b) for a, b in runs), ()) + hecke.hook_word(lo, top + 1)
    m = max(word) + 1
    total = LaurentPoly()
    for mu, f in hecke.trace_expansion(word, m).items():
        total = total + f * _shape_character(g, mu.parts)
    return total


def reduce_word_trace(g, w: Sequence[int]) -> LaurentPoly:
    """Trace in the irrep ``g`` of a word made of cut runs and at most one trailing hook."""
    g = as_partition(g)
    w = tuple(int(i) for i in w)
    if any(not 1 <= i < g.n for i in w):
        raise UnreducibleWord(f"letters of {w} must lie in 1..{g.n - 1}")
    runs, hook = _split_hook(w)
    if hook is None:
        return _shape_character(g, (b - a + 2 for a, b in runs))
    return _expand_hooked(g, runs, hook)


# --- tables and projections ------------------------------------------------------

@dataclass(frozen=True)
class CharacterTable:
    n: int
    rows: tuple[Partition, ...]
    columns: tuple[Partition, ...]
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def entry(self, g, mu) -> LaurentPoly:
        return self.entries[self.rows.index(as_partition(g))][self.columns.index(as_partition(mu))]

    def specialize(self, q0) -> list[list]:
        return [[e(q0) for e in row] for row in self.entries]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rows": [str(g) for g in self.rows],
            "columns": [str(mu) for mu in self.columns],
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["irrep"] + [str(mu) for mu in self.columns])
        for g, row in zip(self.rows, self.entries):
            writer.writerow([str(g)] + [str(e) for e in row])
        return buf.getvalue()


def character_table(n: int) -> CharacterTable:
    parts = tuple(partitions_of(n))
    entries = tuple(tuple(class_character(g, mu) for mu in parts) for g in parts)
    return CharacterTable(n, parts, parts, entries)


def class_size(mu) -> int:
    """Size of the conjugacy class of cycle type ``mu`` in ``S_n``."""
    mu = as_partition(mu)
    z = 1
    for part in set(mu.parts):
        m = mu.parts.count(part)
        z *= part**m * factorial(m)
    return factorial(mu.n) // z


def projection_coefficients(n: int, g) -> list[RationalFunction]:
    """Coefficients ``c_0 .. c_{p-1}`` of ``P_g(x) = prod (x - L')/(L - L')``.

    ``P_g(C_n)`` is the projection onto the ``g``-isotypic part because the
    fundamental invariant separates all irreps.
    """
    if n < 2:
        raise ValueError("projection operators need n >= 2")
    g = as_partition(g)
    if g.n != n:
        raise SizeMismatch(f"{g} is not a partition of {n}")
    lam = fundamental_eigenvalue(g)
    poly = [LaurentPoly.const(1)]  # coefficients in x, low degree first
    denom = LaurentPoly.const(1)
    for other in partitions_of(n):
        if other == g:
            continue
        mu = fundamental_eigenvalue(other)
        if mu == lam:
            raise DegenerateEigenvalues(f"{g} and {other} share eigenvalue {lam}")
        shifted = [LaurentPoly()] + poly
        poly = [shifted[i] - (poly[i] * mu if i < len(poly) else LaurentPoly()) for i in range(len(shifted))]
        denom = denom * (lam - mu)
    return [RationalFunction(c, denom) for c in poly]


def evaluate_projection(coeffs: Sequence[RationalFunction], x) -> RationalFunction:
    """Evaluate the projection polynomial at ``x``.

    For a Laurent ``x`` the sum is formed over a common denominator and
    reduced once; otherwise plain Horner.
    """
    if isinstance(x, RationalFunction) and not x.is_laurent():
        acc = RF_ZERO
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc
    x = LaurentPoly.coerce(x.num if isinstance(x, RationalFunction) else x)
    common = LaurentPoly.const(1)
    for c in coeffs:
        common = common * exact_div(c.den, poly_gcd(common, c.den))
    acc = LaurentPoly()
    for c in reversed(coeffs):
        acc = acc * x + c.num * exact_div(common, c.den)
    return RationalFunction(acc, common)
