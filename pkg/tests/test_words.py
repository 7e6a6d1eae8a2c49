import numpy as np
import pytest

from returnwords.errors import ConstructionError, DomainError, ParameterError
from returnwords.words import (Alphabet, Substitution, WordSource, apply, builtin,
                               characteristic_sturmian_prefix, fixed_point_prefix, format_substitution,
                               is_primitive, parse_substitution)


@pytest.mark.parametrize("name, n, expected", [
    ("fibonacci", 8, "01001010"),
    ("tribonacci", 7, "0102010"),
    ("thue_morse", 8, "01101001"),
    ("chacon_recoded", 7, "1231233"),
    ("r4_example", 5, "13231"),
])
def test_builtin_prefixes(name, n, expected):
    assert builtin(name).prefix(n) == expected


def test_sturmian_directives():
    assert characteristic_sturmian_prefix([1], 8)[:8] == "01001010"
    assert WordSource.sturmian([2, 1]).prefix(6) == "001000"
    assert WordSource.sturmian([1]).prefix(13) == builtin("fibonacci").prefix(13)


def test_periodic_source():
    src = WordSource.periodic("01", preperiod="1")
    assert src.prefix(7) == "1010101"
    assert WordSource.periodic("01").name == "(01)^inf"


def test_prefix_zero_and_negative():
    assert builtin("fibonacci").prefix(0) == ""
    with pytest.raises(ValueError):
        builtin("fibonacci").prefix(-1)


def test_incidence_and_primitivity():
    sub = builtin("fibonacci").substitution
    assert np.array_equal(sub.incidence_matrix, np.array([[1, 1], [1, 0]]))
    for name in ("fibonacci", "tribonacci", "thue_morse", "chacon_recoded", "r4_example"):
        assert is_primitive(builtin(name).substitution)
    assert not is_primitive(Substitution.from_rules({"a": "ab", "b": "b"}, "a"))


def test_seed_condition():
    with pytest.raises((ConstructionError, DomainError)):
        Substitution.from_rules({"0": "10", "1": "1"}, "0")


def test_alphabet_rejects_duplicates():
    with pytest.raises((DomainError, ValueError)):
        Alphabet.of("001")


def test_parse_roundtrip():
    text = "alphabet: 0 1\n0 -> 01\n1 -> 0\nseed: 0\n"
    sub = parse_substitution(text)
    assert fixed_point_prefix(sub, 8)[:8] == "01001010"
    assert parse_substitution(format_substitution(sub)).images == sub.images


@pytest.mark.parametrize("text", [
    "0 -> 01\n0 -> 1\n1 -> 0",
    "0 -> 0x\n1 -> 0",
    "",
])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_substitution(text)


def test_builtin_unknown():
    with pytest.raises(ParameterError):
        builtin("nope")


def test_apply():
    sub = builtin("thue_morse").substitution
    assert apply(sub, "0110") == "01101001"
