from fractions import Fraction

import pytest

from heckeinv.characters import (
    SegmentShape,
    character_table,
    class_character,
    class_size,
    class_word,
    cycle_times_murphy_trace,
    evaluate_projection,
    murphy_expansion,
    overlap_reduction,
    overlap_word,
    projection_coefficients,
    reduce_word_trace,
    single_cycle_trace,
    standard_runs,
    v_reduction,
    v_word,
)
from heckeinv.diagrams import Partition, dimension, fundamental_eigenvalue, partitions_of
from heckeinv.errors import ConsecutiveIndices, SizeMismatch, UnreducibleWord
from heckeinv.laurent import LaurentPoly, RationalFunction, f_coeff
from heckeinv.murphy import murphy_product_trace
from heckeinv.oracle import word_trace

q = LaurentPoly.q()
P = Partition


def test_class_word_examples():
    assert class_word(P((2, 1, 1)), 4) == (1,)
    assert class_word(P((3, 1)), 4) == (1, 2)
    assert class_word(P((2, 2)), 4) == (1, 3)
    assert class_word(P((1, 1, 1)), 3) == ()
    with pytest.raises(SizeMismatch):
        class_word(P((2, 1)), 4)


def test_segment_shape():
    assert SegmentShape.of_word((1, 3), 4) == SegmentShape.of_partition(P((2, 2)))
    assert SegmentShape.of_word((2, 4), 5) == SegmentShape.of_word((1, 4), 5)
    assert SegmentShape((3, 1, 1), 5).partition() == P((3, 1, 1))
    assert standard_runs((1, 2, 4)) == [(1, 2), (4, 4)]
    assert standard_runs((1, 2, 2)) is None
    with pytest.raises(ValueError):
        SegmentShape((3, 3), 5)


def test_single_cycle_examples():
    assert single_cycle_trace(P((2, 1)), 2) == q - 1
    assert single_cycle_trace(P((2, 1)), 3) == -q
    assert single_cycle_trace(P((3,)), 3) == q**2


def test_cycle_times_murphy_examples(irrep):
    assert cycle_times_murphy_trace(P((1, 1, 1, 1)), 2, 4) == 1 + q**-1 + q**-2
    assert cycle_times_murphy_trace(P((4,)), 2, 4) == q**2 * (1 + q + q**2)
    from heckeinv.oracle import murphy_matrix, _word_matrix

    m = irrep(P((2, 2)))
    expected = (_word_matrix(m, (1,)) @ murphy_matrix(m, 4)).trace().to_laurent()
    assert cycle_times_murphy_trace(P((2, 2)), 2, 4) == expected
    with pytest.raises(ConsecutiveIndices):
        cycle_times_murphy_trace(P((2, 2)), 2, 3)


@pytest.mark.parametrize("n", range(4, 7))
def test_cycle_times_murphy_against_oracle(n, irrep):
    from heckeinv.oracle import murphy_matrix, _word_matrix

    for g in partitions_of(n):
        m = irrep(g)
        for k in range(2, n - 1):
            for mm in range(k + 2, n + 1):
                M = _word_matrix(m, range(1, k)) @ murphy_matrix(m, mm)
                assert cycle_times_murphy_trace(g, k, mm) == M.trace().to_laurent()


def test_character_table_small():
    t2 = character_table(2)
    assert t2.entry((2,), (2,)) == q
    assert t2.entry((1, 1), (2,)) == -1
    assert [t2.entry(g, (1, 1)) for g in t2.rows] == [1, 1]
    t3 = character_table(3)
    assert [t3.entry((2, 1), mu) for mu in [(1, 1, 1), (2, 1), (3,)]] == [2, q - 1, -q]
    assert character_table(1).entries == ((LaurentPoly.const(1),),)


def test_class_character_examples():
    assert class_character(P((1, 1, 1)), P((3,))) == 1
    assert class_character(P((2, 1)), P((3,))) == -q
    for g in partitions_of(5):
        assert class_character(g, P((1,) * 5)) == dimension(g)
    with pytest.raises(SizeMismatch):
        class_character(P((2, 1)), P((2, 2)))


@pytest.mark.parametrize("n", range(2, 7))
def test_eqs_30_to_32_identities(n):
    # right-hand sides use Murphy traces only
    for g in partitions_of(n):
        L = lambda *idx: murphy_product_trace(g, idx)
        eq30 = L(2)
        eq31 = (L(3) - 2 * L(2)) * q if n >= 3 else None
        for i in range(1, n):
            assert reduce_word_trace(g, (i,)) == eq30
        for i in range(1, n - 1):
            assert reduce_word_trace(g, (i, i + 1)) * (q - 1) == eq31
        if n >= 4:
            eq32 = -2 * q * L(2) + (q + 1) ** 2 * L(3) - (1 + q**2) * L(4) + (q - 1) * L(2, 4)
            for i in range(1, n - 2):
                assert reduce_word_trace(g, (i, i + 2)) * (q - 1) == eq32


def test_expansions_do_not_depend_on_n():
    for core in [P((2,)), P((3,)), P((2, 2)), P((4,)), P((3, 2))]:
        base = murphy_expansion(core)
        for extra in range(1, 3):
            assert murphy_expansion(P(core.parts + (1,) * extra)) == base
    assert murphy_expansion(P((2, 2))) == {
        (2,): RationalFunction(-2 * q, q - 1),
        (3,): RationalFunction((q + 1) ** 2, q - 1),
        (4,): RationalFunction(-(1 + q**2), q - 1),
        (2, 4): RationalFunction(1),
    }


def test_murphy_expansion_of_identity():
    assert murphy_expansion(P((1, 1, 1))) == {(): RationalFunction(1)}


def test_reduce_word_examples():
    for g in partitions_of(4):
        assert reduce_word_trace(g, (1,)) == single_cycle_trace(g, 2)
    assert reduce_word_trace(P((1, 1, 1, 1)), (1, 3)) == 1
    for g in partitions_of(5):
        assert reduce_word_trace(g, (2, 4)) == reduce_word_trace(g, (1, 3))


def test_reduce_word_errors():
    with pytest.raises(UnreducibleWord):
        reduce_word_trace(P((2, 1)), (3,))
    with pytest.raises(UnreducibleWord):
        reduce_word_trace(P((3, 2)), (2, 1))
    with pytest.raises(UnreducibleWord):
        reduce_word_trace(P((3, 2)), (1, 2, 1, 3))


def test_v_reduction_coefficients():
    (only,) = v_reduction(2, 3, 1)
    assert only == (LaurentPoly.const(1), (1, 3, 4))
    two = v_reduction(2, 3, 2)
    assert two == [(q - 1, (1, 3, 4, 5)), (q, (1, 3, 4))]
    assert v_reduction(0, 0, 1) == [(LaurentPoly.const(1), (1,))]


def test_overlap_reduction_coefficients():
    assert overlap_reduction(3, 3, 1) == [((q - 1) * q, 1), (q**2 - q + 1, 0)]
    terms = overlap_reduction(4, 2, 2)
    assert [k for _, k in terms] == [1, 2, 3, 0]
    assert terms[0][0] == (q - 1) * q * f_coeff(5)
    assert terms[-1][0] == f_coeff(7)


@pytest.mark.parametrize("n", range(3, 7))
def test_v_identity_against_oracle(n, irrep):
    for g in partitions_of(n):
        m = irrep(g)
        for p in range(0, n - 1):
            for k in [0] + list(range(1, p + 1)):
                if k == p and k > 0:
                    continue  # second run would be empty
                for r in range(1, n - 1 - p):
                    expanded = sum(
                        (c * word_trace(m, w) for c, w in v_reduction(k, p, r)), LaurentPoly()
                    )
                    assert expanded == word_trace(m, v_word(k, p, r))


@pytest.mark.parametrize("n", range(3, 7))
def test_overlap_identity_against_oracle(n, irrep):
    for g in partitions_of(n):
        m = irrep(g)
        for p in range(1, n - 1):
            for l in range(1, p + 1):
                for r in range(1, n - p):
                    rhs = LaurentPoly()
                    for c, k in overlap_reduction(p, l, r):
                        rhs = rhs + c * word_trace(m, v_word(k, p, r))
                    assert rhs == word_trace(m, overlap_word(p, l, r))


def test_overlap_full_check_h4(irrep):
    for g in partitions_of(4):
        assert reduce_word_trace(g, (1, 2, 2, 3, 2)) == word_trace(irrep(g), (1, 2, 2, 3, 2))


@pytest.mark.parametrize("n", range(2, 7))
def test_hooked_words_against_oracle(n, irrep):
    for g in partitions_of(n):
        m = irrep(g)
        for lo in range(1, n - 1):
            for top in range(lo + 1, n):
                hook = tuple(range(lo, top + 1)) + tuple(range(top - 1, lo - 1, -1))
                for prefix in [(), (1,), (1, 2), (1, 3)]:
                    if prefix and max(prefix) >= n:
                        continue
                    w = prefix + hook
                    try:
                        value = reduce_word_trace(g, w)
                    except UnreducibleWord:
                        continue
                    assert value == word_trace(m, w), (g, w)


@pytest.mark.parametrize("n", range(1, 7))
def test_pipeline_equals_oracle(n, irrep):
    for g in partitions_of(n):
        m = irrep(g)
        for mu in partitions_of(n):
            assert class_character(g, mu) == word_trace(m, class_word(mu, n))


@pytest.mark.parametrize("n", range(1, 9))
def test_column_orthogonality_at_one(n):
    t = character_table(n)
    vals = t.specialize(1)
    order = sum(class_size(mu) for mu in t.columns)
    for a in range(len(t.rows)):
        for b in range(len(t.rows)):
            s = sum(class_size(mu) * vals[a][j] * vals[b][j] for j, mu in enumerate(t.columns))
            assert s == (order if a == b else 0)


def test_table_serialisation():
    t = character_table(3)
    js = t.to_json()
    assert js["rows"] == ["[3]", "[2,1]", "[1,1,1]"]
    assert LaurentPoly.from_json(js["entries"][1][0]) == -q
    lines = t.to_csv().splitlines()
    assert lines[0] == 'irrep,[3],"[2,1]","[1,1,1]"'
    assert lines[2] == '"[2,1]",-q,q-1,2'


def test_projection_examples():
    c2 = projection_coefficients(2, P((2,)))
    assert c2 == [RationalFunction(1, q + 1), RationalFunction(1, q + 1)]
    c11 = projection_coefficients(2, P((1, 1)))
    assert c11 == [RationalFunction(-q, -1 - q), RationalFunction(1, -1 - q)]
    assert evaluate_projection(c2, q) == 1 and evaluate_projection(c2, -1) == 0


@pytest.mark.parametrize("n", range(2, 7))
def test_projection_partition_of_unity(n):
    coeffs = [projection_coefficients(n, g) for g in partitions_of(n)]
    width = max(len(c) for c in coeffs)
    for d in range(width):
        s = sum((c[d] for c in coeffs if d < len(c)), RationalFunction(0))
        assert s == (1 if d == 0 else 0)
    for g in partitions_of(n):
        for h in partitions_of(n):
            value = evaluate_projection(projection_coefficients(n, g), fundamental_eigenvalue(h))
            assert value == (1 if g == h else 0)


def test_class_size():
    assert class_size(P((2, 1, 1))) == 6
    assert class_size(P((2, 2))) == 3
    assert sum(class_size(mu) for mu in partitions_of(6)) == 720
    assert Fraction(class_size(P((6,)))) == 120
