"""Hecke algebra elements in the standard basis ``T_w`` and their class polynomials.

An element of ``H_m(q)`` is a dict mapping a permutation (one-line tuple of
``0..m-1``) to a :class:`LaurentPoly` coefficient.  ``T_w T_s = T_{ws}`` when
the length goes up and ``(q-1) T_w + q T_{ws}`` when it goes down.

Any trace function ``tau`` on ``H_m`` satisfies
``tau(T_w) = sum_mu f_{w,mu} tau(T_{w_mu})`` where ``w_mu`` is a product of
disjoint ascending runs of cycle type ``mu``.  The class polynomials
``f_{w,mu}`` are found by cyclic shifts: conjugations ``w -> s w s`` that keep
the length leave the trace unchanged, and one that drops the length by two
gives ``tau(T_w) = (q-1) tau(T_{ws}) + q tau(T_{sws})``.  When no such drop
exists anywhere in the cyclic-shift class, ``w`` has minimal length in its
conjugacy class and its trace is that of ``w_mu``.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .diagrams import Partition
from .laurent import LaurentPoly

Perm = tuple[int, ...]
Element = dict

_Q = LaurentPoly.q()
_QM1 = _Q - 1


def identity(m: int) -> Perm:
    return tuple(range(m))


def length(w: Perm) -> int:
    m = len(w)
    return sum(1 for a in range(m) for b in range(a + 1, m) if w[a] > w[b])


def cycle_type(w: Perm) -> Partition:
    seen = [False] * len(w)
    lengths = []
    for start in range(len(w)):
        if seen[start]:
            continue
        k, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = w[x]
            k += 1
        lengths.append(k)
    return Partition(sorted(lengths, reverse=True))


def _rmul_s(w: Perm, i: int) -> Perm:
    # w * s_i : swap positions i-1, i
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def _conj_s(w: Perm, i: int) -> Perm:
    # s_i * w * s_i
    a, b = i - 1, i
    lst = list(w)
    lst[a], lst[b] = lst[b], lst[a]
    return tuple(b if x == a else a if x == b else x for x in lst)


def _accumulate(out: Element, w: Perm, c: LaurentPoly):
    prev = out.get(w)
    s = c if prev is None else prev + c
    if s.is_zero():
        out.pop(w, None)
    else:
        out[w] = s


def mul_generator(x: Element, i: int) -> Element:
    """Right multiplication by ``T_{s_i}`` (``1 <= i < m``)."""
    out: Element = {}
    for w, c in x.items():
        ws = _rmul_s(w, i)
        if w[i - 1] < w[i]:
            _accumulate(out, ws, c)
        else:
            _accumulate(out, w, c * _QM1)
            _accumulate(out, ws, c * _Q)
    return out


def mul_word(x: Element, word: Iterable[int]) -> Element:
    for i in word:
        x = mul_generator(x, i)
    return x


def word_element(word: Iterable[int], m: int) -> Element:
    """The element ``g_{i1} g_{i2} ...`` of ``H_m``."""
    return mul_word({identity(m): LaurentPoly.const(1)}, word)


def add(x: Element, y: Element, scale: LaurentPoly | None = None) -> Element:
    out = dict(x)
    for w, c in y.items():
        _accumulate(out, w, c if scale is None else c * scale)
    return out


def mul(x: Element, y: Element) -> Element:
    """Product of two elements, expanding ``y`` through reduced words."""
    out: Element = {}
    for w, c in y.items():
        part = mul_word(x, reduced_word(w))
        out = add(out, part, c)
    return out


def reduced_word(w: Perm) -> tuple[int, ...]:
    """A reduced word ``(i1, ..., ik)`` with ``w = s_{i1} ... s_{ik}``."""
    word = []
    lst = list(w)
    # bubble sort from the right: w = v s_i with l(v) < l(w) when lst[i-1] > lst[i]
    while True:
        for i in range(1, len(lst)):
            if lst[i - 1] > lst[i]:
                lst[i - 1], lst[i] = lst[i], lst[i - 1]
                word.append(i)
                break
        else:
            break
    return tuple(reversed(word))


def hook_word(i: int, p: int) -> tuple[int, ...]:
    """``g_i g_{i+1} ... g_{p-1} ... g_{i+1} g_i``, a reduced word of the transposition ``(i p)``."""
    up = tuple(range(i, p))
    return up + tuple(reversed(up[:-1]))


def murphy_element(p: int, m: int) -> Element:
    """``L_p = sum_{i<p} q^{1-p+i} T_{(i p)}`` as an element of ``H_m``."""
    out: Element = {}
    for i in range(1, p):
        x = word_element(hook_word(i, p), m)
        out = add(out, x, LaurentPoly.monomial(1 - p + i))
    return out


class ClassPolynomials:
    """Memoised class polynomials ``w -> {mu: f_{w,mu}}`` for one rank ``m``."""

    def __init__(self, m: int):
        self.m = m
        self._memo: dict[Perm, dict[Partition, LaurentPoly]] = {}

    def __call__(self, w: Perm) -> dict[Partition, LaurentPoly]:
        hit = self._memo.get(w)
        if hit is not None:
            return hit
        lw = length(w)
        seen = {w}
        queue = deque([w])
        result = None
        while queue and result is None:
            v = queue.popleft()
            for i in range(1, self.m):
                u = _conj_s(v, i)
                if u in seen:
                    continue
                lu = length(u)
                if lu < lw:
                    # v = s u s with l(v) = l(u) + 2
                    result = _combine(self(_rmul_s(v, i)), _QM1, self(u), _Q)
                    break
                if lu == lw:
                    seen.add(u)
                    queue.append(u)
        if result is None:
            result = {cycle_type(w): LaurentPoly.const(1)}
        for v in seen:
            self._memo[v] = result
        return result

    def trace(self, x: Element) -> dict[Partition, LaurentPoly]:
        """Class-polynomial expansion of a whole element."""
        out: dict[Partition, LaurentPoly] = {}
        for w, c in x.items():
            for mu, f in self(w).items():
                s = out.get(mu, LaurentPoly()) + c * f
                if s.is_zero():
                    out.pop(mu, None)
                else:
                    out[mu] = s
        return out


def _combine(a: dict, ca: LaurentPoly, b: dict, cb: LaurentPoly) -> dict:
    out = {mu: f * ca for mu, f in a.items()}
    for mu, f in b.items():
        s = out.get(mu, LaurentPoly()) + f * cb
        if s.is_zero():
            out.pop(mu, None)
        else:
            out[mu] = s
    return out


_class_polys: dict[int, ClassPolynomials] = {}


def class_polynomials(m: int) -> ClassPolynomials:
    cp = _class_polys.get(m)
    if cp is None:
        cp = _class_polys.setdefault(m, ClassPolynomials(m))
    return cp


def trace_expansion(word: Iterable[int], m: int) -> dict[Partition, LaurentPoly]:
    """Express the trace of a generator word through class-representative traces."""
    return class_polynomials(m).trace(word_element(word, m))
