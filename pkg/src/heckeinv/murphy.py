"""Traces of Murphy operators via branching over diagram corners.

The Murphy operators ``L_2, ..., L_n`` act diagonally on the chain basis, the
eigenvalue of ``L_i`` on a chain being the q-content of the box added at step
``i``.  Traces therefore follow from two recursions on the shape ``g`` of
``n`` boxes:

* if every index is below ``n``, sum the trace over shapes ``g`` minus a corner;
* if the top index equals ``n``, weight each corner's sub-trace by the
  q-content of that corner and drop the top index.

The empty product has trace ``dimension(g)``.
"""

from __future__ import annotations

import threading
from typing import Iterable

from .diagrams import Partition, as_partition, dimension, q_content
from .errors import ConsecutiveIndices, IndexOutOfRange
from .laurent import LaurentPoly

__all__ = [
    "MurphyIndexList",
    "TraceTable",
    "murphy_index_list",
    "murphy_trace",
    "murphy_product_trace",
    "default_table",
]

MurphyIndexList = tuple[int, ...]


def murphy_index_list(indices: Iterable[int], n: int | None = None) -> MurphyIndexList:
    """Canonicalise (sort) and validate a list of non-consecutive Murphy indices."""
    idx = tuple(sorted(int(i) for i in indices))
    for i in idx:
        if i < 2 or (n is not None and i > n):
            raise IndexOutOfRange(f"Murphy index {i} outside 2..{n}")
    for a, b in zip(idx, idx[1:]):
        if b - a < 2:
            raise ConsecutiveIndices(f"indices {a} and {b} are not separated by at least 2")
    return idx


class TraceTable:
    """Memo of ``(shape, indices) -> trace``.

    Inserts are idempotent, so concurrent writers racing on a key store the
    same value.
    """

    def __init__(self):
        self._entries: dict[tuple[Partition, MurphyIndexList], LaurentPoly] = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._entries)

    def __contains__(self, key):
        return key in self._entries

    def get(self, g: Partition, idx: MurphyIndexList):
        return self._entries.get((g, idx))

    def put(self, g: Partition, idx: MurphyIndexList, value: LaurentPoly) -> LaurentPoly:
        with self._lock:
            return self._entries.setdefault((g, idx), value)

    def trace(self, g, idx: MurphyIndexList) -> LaurentPoly:
        g = as_partition(g)
        idx = murphy_index_list(idx, g.n)
        return self._trace(g, idx)

    def _trace(self, g: Partition, idx: MurphyIndexList) -> LaurentPoly:
        hit = self._entries.get((g, idx))
        if hit is not None:
            return hit
        n = g.n
        if not idx:
            value = LaurentPoly.const(dimension(g))
        elif idx[-1] < n:
            value = LaurentPoly()
            for corner in g.removable_boxes():
                value = value + self._trace(g.remove_box(corner), idx)
        else:
            rest = idx[:-1]
            value = LaurentPoly()
            for r, c in g.removable_boxes():
                value = value + q_content(c - r) * self._trace(g.remove_box((r, c)), rest)
        return self.put(g, idx, value)

    def clear(self):
        with self._lock:
            self._entries.clear()


default_table = TraceTable()


def murphy_product_trace(g, idx: Iterable[int], table: TraceTable | None = None) -> LaurentPoly:
    """Trace of ``prod L_a`` over non-consecutive ``idx`` in the irrep ``g``."""
    return (default_table if table is None else table).trace(g, tuple(idx))


def murphy_trace(g, i: int, table: TraceTable | None = None) -> LaurentPoly:
    """Trace of the single Murphy operator ``L_i`` in the irrep ``g``."""
    g = as_partition(g)
    if not 2 <= i <= g.n:
        raise IndexOutOfRange(f"Murphy index {i} outside 2..{g.n}")
    return murphy_product_trace(g, (i,), table)
