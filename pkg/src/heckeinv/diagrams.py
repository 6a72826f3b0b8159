"""Young diagrams, contents, chain bases and the fundamental-invariant eigenvalue.

Boxes are addressed ``(row, column)`` with 1-based indices, so the content of
a box is ``column - row``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .errors import NoSuchDiagram, UnsupportedOrder
from .laurent import DeltaSeries, LaurentPoly, q_bracket, to_delta_series

Box = tuple[int, int]


@dataclass(frozen=True, order=True)
class Partition:
    """A Young diagram given by its non-increasing row lengths."""

    parts: tuple[int, ...]

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"

    def __repr__(self):
        return f"Partition({str(self)})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``[4,1,1]`` (brackets and spaces optional)."""
        body = text.strip().strip("[]()").replace(" ", "")
        if not body:
            return cls(())
        return cls(tuple(int(t) for t in body.split(",")))

    def boxes(self) -> Iterator[Box]:
        for i, length in enumerate(self.parts, start=1):
            for j in range(1, length + 1):
                yield (i, j)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))

    def removable_boxes(self) -> list[Box]:
        """Corners, top row first."""
        out = []
        for i, length in enumerate(self.parts, start=1):
            below = self.parts[i] if i < len(self.parts) else 0
            if length > below:
                out.append((i, length))
        return out

    def addable_boxes(self) -> list[Box]:
        out = []
        for i in range(1, len(self.parts) + 2):
            length = self.parts[i - 1] if i <= len(self.parts) else 0
            above = self.parts[i - 2] if i >= 2 else None
            if above is None or above > length:
                out.append((i, length + 1))
        return out

    def remove_box(self, box: Box) -> "Partition":
        i, _ = box
        parts = list(self.parts)
        parts[i - 1] -= 1
        return Partition(parts)

    def add_box(self, box: Box) -> "Partition":
        i, _ = box
        parts = list(self.parts)
        if i == len(parts) + 1:
            parts.append(1)
        else:
            parts[i - 1] += 1
        return Partition(parts)


def as_partition(g) -> Partition:
    if isinstance(g, Partition):
        return g
    if isinstance(g, str):
        return Partition.parse(g)
    return Partition(tuple(g))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, ``[n]`` first."""
    if n < 1:
        raise ValueError("n must be positive")
    return [Partition(p) for p in _partitions(n, n)]


def contents(g) -> list[int]:
    """Contents ``column - row`` of the boxes, in row-major order."""
    return [j - i for i, j in as_partition(g).boxes()]


def classical_eigenvalue(g, p: int) -> Fraction | int:
    """Eigenvalue of the S_n class sum of 2-cycles (``p=2``) or 3-cycles (``p=3``)."""
    g = as_partition(g)
    cs = contents(g)
    if p == 2:
        return sum(cs)
    if p == 3:
        n = g.n
        return sum(c * c for c in cs) - Fraction(n * (n - 1), 2)
    raise UnsupportedOrder(f"class-sum eigenvalue only for p in (2, 3), got {p}")


def q_content(c: int) -> LaurentPoly:
    """``q [c]_q`` for a box of content ``c``."""
    return q_bracket(c).shift(1)


@lru_cache(maxsize=None)
def _fundamental_eigenvalue(g: Partition) -> LaurentPoly:
    counts = Counter(contents(g))
    total = LaurentPoly()
    for c, m in counts.items():
        total = total + q_content(c) * m
    return total


def fundamental_eigenvalue(g) -> LaurentPoly:
    """Scalar by which the fundamental invariant acts on irrep ``g``: sum of q-contents."""
    return _fundamental_eigenvalue(as_partition(g))


@dataclass(frozen=True)
class ContentProfile:
    """Tail sums of diagonal box counts.

    ``pi[k]`` (k > 0) counts boxes of content >= k, ``nu[k]`` (k < 0) counts
    boxes of content <= k.
    """

    pi: dict = field(default_factory=dict)
    nu: dict = field(default_factory=dict)

    def eigenvalue(self) -> LaurentPoly:
        total = LaurentPoly()
        for k, v in self.pi.items():
            total = total + LaurentPoly.monomial(k, v)
        for k, v in self.nu.items():
            total = total - LaurentPoly.monomial(k + 1, v)
        return total


def content_profile(g) -> ContentProfile:
    counts = Counter(contents(g))
    pi, nu = {}, {}
    if counts:
        for k in range(1, max(counts) + 1):
            pi[k] = sum(m for c, m in counts.items() if c >= k)
        for k in range(-1, min(counts) - 1, -1):
            nu[k] = sum(m for c, m in counts.items() if c <= k)
    return ContentProfile(pi=pi, nu=nu)


def _diagram_from_diagonals(diag: dict[int, int], n: int) -> Partition:
    # diagonal l >= 0 holds boxes (i, i + l) for i <= diag[l];
    # diagonal l < 0 holds boxes (j - l, j) for j <= diag[l].
    rows = []
    for i in range(1, n + 1):
        length = 0
        for j in range(1, n + 1):
            l = j - i
            k = i if l >= 0 else j
            if k <= diag.get(l, 0):
                length = j
            else:
                break
        if length == 0:
            break
        rows.append(length)
    return Partition(rows)


def reconstruct_from_eigenvalue(v: LaurentPoly, n: int) -> Partition:
    """Invert :func:`fundamental_eigenvalue` on partitions of ``n``.

    Reads the content profile off the coefficients, turns the tail sums into
    per-diagonal counts and rebuilds the diagram one diagonal at a time.
    """
    bad = NoSuchDiagram(f"{v} is not the eigenvalue of any partition of {n}")
    if n < 1:
        raise bad
    coeffs = {}
    for e, c in v.items():
        if not isinstance(c, int):
            raise bad
        coeffs[e] = c
    pi = {k: c for k, c in coeffs.items() if k >= 1}
    nu = {k - 1: -c for k, c in coeffs.items() if k <= 0}
    diag: dict[int, int] = {}
    top = max(pi, default=0)
    for k in range(1, top + 1):
        diag[k] = pi.get(k, 0) - pi.get(k + 1, 0)
    bottom = min(nu, default=0)
    for k in range(-1, bottom - 1, -1):
        diag[k] = nu.get(k, 0) - nu.get(k - 1, 0)
    diag[0] = n - sum(diag.values())
    if any(m < 0 for m in diag.values()) or diag[0] < 1:
        raise bad
    try:
        g = _diagram_from_diagonals(diag, n)
    except ValueError:
        raise bad from None
    if g.n != n or fundamental_eigenvalue(g) != v:
        raise bad
    return g


@dataclass(frozen=True)
class DiagramChain:
    """A maximal chain of diagrams, one box added per step (a standard tableau)."""

    shapes: tuple[Partition, ...]
    added_boxes: tuple[Box, ...]

    @property
    def n(self) -> int:
        return len(self.added_boxes)

    def box(self, i: int) -> Box:
        """Box added at step ``i`` (1-based)."""
        return self.added_boxes[i - 1]

    def content(self, i: int) -> int:
        r, c = self.added_boxes[i - 1]
        return c - r

    def swapped(self, p: int) -> "DiagramChain | None":
        """The chain with steps ``p`` and ``p+1`` exchanged, if still valid."""
        boxes = list(self.added_boxes)
        (r1, c1), (r2, c2) = boxes[p - 1], boxes[p]
        if r1 == r2 or c1 == c2:
            return None
        boxes[p - 1], boxes[p] = boxes[p], boxes[p - 1]
        return chain_from_boxes(boxes)


def chain_from_boxes(boxes) -> DiagramChain:
    shapes = []
    g = Partition(())
    for b in boxes:
        if tuple(b) not in g.addable_boxes():
            raise ValueError(f"box {b} cannot be added to {g}")
        g = g.add_box(tuple(b))
        shapes.append(g)
    return DiagramChain(tuple(shapes), tuple(tuple(b) for b in boxes))


@lru_cache(maxsize=None)
def _box_sequences(g: Partition) -> tuple[tuple[Box, ...], ...]:
    if g.n == 0:
        return ((),)
    out = []
    for corner in g.removable_boxes():
        for seq in _box_sequences(g.remove_box(corner)):
            out.append(seq + (corner,))
    return tuple(out)


def iter_chains(g) -> Iterator[DiagramChain]:
    g = as_partition(g)
    for seq in _box_sequences(g):
        yield chain_from_boxes(seq)


def chains_of(g) -> list[DiagramChain]:
    """All maximal chains ending at ``g`` (one per standard Young tableau)."""
    g = as_partition(g)
    if g.n > 12:
        raise ValueError("refusing to materialise chains beyond 12 boxes; use dimension()")
    return list(iter_chains(g))


@lru_cache(maxsize=None)
def _dimension(g: Partition) -> int:
    if g.n <= 1:
        return 1
    return sum(_dimension(g.remove_box(b)) for b in g.removable_boxes())


def dimension(g) -> int:
    """Number of maximal chains, by the branching recursion over corners."""
    return _dimension(as_partition(g))


def q_content_added(chain: DiagramChain, i: int) -> LaurentPoly:
    """q-content ``q [col - row]_q`` of the box added at step ``i``."""
    if not 2 <= i <= chain.n:
        raise IndexError(f"step {i} outside 2..{chain.n}")
    return q_content(chain.content(i))


def scaled_invariant_series(g, order: int) -> DeltaSeries:
    """delta-series of ``((q-1)/q) * fundamental_eigenvalue(g)`` with ``q = e^delta``."""
    lam = fundamental_eigenvalue(g)
    scaled = lam - lam.shift(-1)
    return to_delta_series(scaled, order)
