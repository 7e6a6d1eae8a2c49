import pytest

from returnwords.errors import PreconditionError
from returnwords.rm import (check_product_structure, check_rm, check_theorem1,
                            check_unique_special_criterion, exclusion_predicates_agree)
from returnwords.words import WordSource


@pytest.mark.parametrize("name, m, n", [("fibonacci", 2, 20), ("tribonacci", 3, 16), ("r4_example", 4, 10)])
@pytest.mark.parametrize("method", ["full", "bispecial"])
def test_holds(sources, name, m, n, method):
    v = check_rm(sources[name], m, n, method=method)
    assert v.holds and v.max_length == n and v.witness is None


def test_thue_morse_fails_at_one_letter(sources):
    v = check_rm(sources["thue_morse"], 2, 6)
    assert (v.holds, v.witness, v.witness_count) == (False, "0", 3)


def test_periodic_witness():
    v = check_rm(WordSource.periodic("01"), 2, 8)
    assert v.witness == "0" and v.witness_count == 1 and v.eventually_periodic
    assert v.as_dict()["witness"] == {"factor": "0", "returns": 1, "eventually_periodic": True}


def test_chacon_witness_is_shortest(sources):
    for method in ("full", "bispecial"):
        v = check_rm(sources["chacon_recoded"], 3, 10, method=method)
        assert (v.witness, v.witness_count) == ("23", 4)


@pytest.mark.parametrize("name", ["fibonacci", "tribonacci", "thue_morse", "chacon_recoded", "r4_example"])
def test_method_agreement(sources, tables, name):
    m = len(sources[name].alphabet)
    a = check_rm(sources[name], m, 12, method="full", table=tables[name])
    b = check_rm(sources[name], m, 12, method="bispecial", table=tables[name])
    assert (a.holds, a.witness, a.witness_count) == (b.holds, b.witness, b.witness_count)


def test_bad_method(sources):
    with pytest.raises(ValueError):
        check_rm(sources["fibonacci"], 2, 3, method="fast")


def test_theorem_instances(sources):
    tri = check_theorem1(sources["tribonacci"], 3, 14)
    assert tri.no_weak_bispecial and tri.affine_complexity and tri.rm_holds
    assert tri.lemma_lower_checked and tri.lemma_delta_checked
    ch = check_theorem1(sources["chacon_recoded"], 3, 14)
    assert not ch.no_weak_bispecial and ch.affine_complexity and not ch.rm_holds
    r4 = check_theorem1(sources["r4_example"], 4, 10)
    assert not r4.no_weak_bispecial and not r4.affine_complexity and r4.rm_holds


def test_maximal_right_exclusion(sources, tables):
    rep = check_theorem1(sources["fibonacci"], 2, 14, exclusion="maximal-right")
    assert rep.no_weak_bispecial and rep.rm_holds
    for name in ("fibonacci", "thue_morse", "chacon_recoded"):
        assert exclusion_predicates_agree(tables[name], 12)


def test_unique_special_criterion(tables):
    assert check_unique_special_criterion(tables["fibonacci"], 2, 20)
    assert check_unique_special_criterion(tables["tribonacci"], 3, 20)
    assert not check_unique_special_criterion(tables["r4_example"], 4, 6)


def test_product_structure(sources):
    wit = check_product_structure(sources["r4_example"], "1")
    assert (wit.w1, wit.w2) == ("31", "41")
    assert wit.v == ("314232", "3142", "41", "4132")
    assert check_product_structure(sources["r4_example"], "23") is not None


def test_product_structure_preconditions(sources):
    with pytest.raises(PreconditionError):
        check_product_structure(sources["r4_example"], "2")
    with pytest.raises(PreconditionError):
        check_product_structure(sources["chacon_recoded"], "3")
