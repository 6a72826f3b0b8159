import itertools
import random

import pytest

from heckeinv import hecke
from heckeinv.characters import class_character
from heckeinv.diagrams import Partition, partitions_of
from heckeinv.laurent import LaurentPoly
from heckeinv.oracle import word_trace

q = LaurentPoly.q()


def _same(x, y):
    keys = set(x) | set(y)
    return all(x.get(k, LaurentPoly()) == y.get(k, LaurentPoly()) for k in keys)


@pytest.mark.parametrize("m", [3, 4, 5])
def test_relations_in_standard_basis(m):
    e = {hecke.identity(m): LaurentPoly.const(1)}
    for i in range(1, m):
        g = hecke.word_element((i,), m)
        assert _same(hecke.mul(g, g), hecke.add(hecke.add({}, g, q - 1), e, q))
        for j in range(i + 2, m):
            h = hecke.word_element((j,), m)
            assert _same(hecke.mul(g, h), hecke.mul(h, g))
    for i in range(1, m - 1):
        assert _same(hecke.word_element((i, i + 1, i), m), hecke.word_element((i + 1, i, i + 1), m))


def test_reduced_word_round_trip():
    for w in itertools.permutations(range(5)):
        word = hecke.reduced_word(w)
        assert len(word) == hecke.length(w)
        assert hecke.word_element(word, 5) == {w: LaurentPoly.const(1)}


def test_hook_word():
    assert hecke.hook_word(1, 2) == (1,)
    assert hecke.hook_word(1, 4) == (1, 2, 3, 2, 1)
    assert hecke.hook_word(2, 4) == (2, 3, 2)


@pytest.mark.parametrize("m", [4, 5])
def test_murphy_recursion_as_elements(m):
    # q L_{p+1} = g_p L_p g_p + q g_p
    for p in range(2, m):
        g = hecke.word_element((p,), m)
        lhs = hecke.add({}, hecke.murphy_element(p + 1, m), q)
        rhs = hecke.add(hecke.mul(hecke.mul(g, hecke.murphy_element(p, m)), g), g, q)
        assert _same(lhs, rhs)


def test_murphy_elements_commute():
    m = 5
    L = [hecke.murphy_element(p, m) for p in range(2, m + 1)]
    for a, b in itertools.combinations(L, 2):
        assert _same(hecke.mul(a, b), hecke.mul(b, a))


@pytest.mark.parametrize("m", [3, 4, 5])
def test_class_polynomials_at_q_one(m):
    cp = hecke.class_polynomials(m)
    for w in itertools.permutations(range(m)):
        f = cp(w)
        at1 = {mu: c(1) for mu, c in f.items() if c(1) != 0}
        assert at1 == {hecke.cycle_type(w): 1}


def test_minimal_representatives_are_fixed():
    for mu in partitions_of(5):
        word = []
        s = 0
        for part in mu.parts:
            word.extend(range(s + 1, s + part))
            s += part
        assert hecke.trace_expansion(word, 5) == {mu: LaurentPoly.const(1)}


def test_trace_expansion_matches_oracle(irrep):
    rng = random.Random(7)
    m = 5
    for _ in range(25):
        word = [rng.randint(1, m - 1) for _ in range(rng.randint(0, 7))]
        expansion = hecke.trace_expansion(word, m)
        for g in partitions_of(m):
            value = sum(
                (f * class_character(g, mu) for mu, f in expansion.items()), LaurentPoly()
            )
            assert value == word_trace(irrep(g), word)


def test_cycle_type():
    assert hecke.cycle_type((1, 0, 3, 2)) == Partition((2, 2))
    assert hecke.cycle_type((1, 2, 0, 3)) == Partition((3, 1))
