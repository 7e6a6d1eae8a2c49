import pytest

from returnwords.errors import NotAFactorError, ReductionNotApplicable, TrieCapError
from returnwords.factors import build_factor_table
from returnwords.returns import (build_return_trie, conjugate_left, reduce_right, return_set,
                                 trie_leaf_identity, trie_to_dot)
from returnwords.words import WordSource


def test_thue_morse_trie(tables):
    trie = build_return_trie(tables["thue_morse"], "01")
    assert set(trie.internal) == {"01", "010", "011", "0100", "0110", "01100"}
    assert set(trie.leaves) == {"0101", "01001", "01101", "011001"}
    assert trie.return_words() == {"01", "010", "011", "0110"}
    assert trie_leaf_identity(trie)


def test_dot_output(tables):
    dot = trie_to_dot(build_return_trie(tables["thue_morse"], "01"))
    assert dot.startswith("digraph returns {") and dot.count("doublecircle") == 4
    assert dot.count("->") == 9


def test_empty_word_returns_alphabet(sources):
    for src in sources.values():
        assert return_set(src, "").as_set() == frozenset(src.alphabet)


def test_canonical_order(sources):
    rs = return_set(sources["r4_example"], "23")
    assert rs.returns == ("2314", "232413142413", "2314241314", "232413")
    assert rs.complete[0] == "231423"


def test_eventually_periodic_single_return():
    rs = return_set(WordSource.periodic("01"), "0")
    assert rs.returns == ("01",) and rs.eventually_periodic


def test_not_a_factor(sources, tables):
    with pytest.raises(NotAFactorError):
        return_set(sources["fibonacci"], "11", table=tables["fibonacci"])
    with pytest.raises(NotAFactorError):
        build_return_trie(tables["fibonacci"], "11")


def test_trie_cap(tables):
    with pytest.raises(TrieCapError):
        build_return_trie(tables["r4_example"], "23", depth_cap=6)


def test_trie_grows_table(sources):
    t = build_factor_table(sources["r4_example"], 2)
    trie = build_return_trie(t, "23")
    assert trie.table.max_length > 2 and len(trie.leaves) == 4


def test_reduction_and_conjugation(sources, tables):
    src, t = sources["fibonacci"], tables["fibonacci"]
    # "1" is always followed by "0" and preceded by "0"
    assert reduce_right(src, "1", t).as_set() == return_set(src, "10").as_set()
    assert conjugate_left(src, "0", "1", t).as_set() == return_set(src, "01").as_set()
    with pytest.raises(ReductionNotApplicable):
        reduce_right(src, "0", t)
    with pytest.raises(ReductionNotApplicable):
        conjugate_left(src, "1", "1", t)


def test_certificate_is_strong(sources):
    rs = return_set(sources["r4_example"], "2413142")
    assert rs.occurrences_used >= 64
    assert rs.certificate[0] >= 32 * max(map(len, rs.returns))
