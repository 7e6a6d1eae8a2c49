"""Randomized checks of the structural identities."""
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from returnwords import factors as F
from returnwords.beta import beta_source, check_coefficients, dominant_root
from returnwords.rm import check_unique_special_criterion
from returnwords.returns import build_return_trie, return_set, trie_leaf_identity
from returnwords.words import WordSource, apply, builtin, characteristic_sturmian_prefix, fixed_point_prefix

from conftest import BUILTINS

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
names = st.sampled_from(BUILTINS)
directives = st.lists(st.integers(1, 4), min_size=1, max_size=4)


@SETTINGS
@given(names, st.integers(0, 3000), st.integers(0, 3000))
def test_prefix_monotone(name, a, b):
    src = builtin(name)
    short, long_ = sorted((a, b))
    first = src.prefix(short)
    assert src.prefix(long_).startswith(first)


@SETTINGS
@given(directives, st.integers(0, 2000), st.integers(0, 2000))
def test_sturmian_prefix_monotone(ds, a, b):
    src = WordSource.sturmian(ds)
    short, long_ = sorted((a, b))
    assert src.prefix(long_)[:short] == src.prefix(short)


@SETTINGS
@given(names, st.integers(0, 2000))
def test_fixed_point_property(name, n):
    src = builtin(name)
    w = src.prefix(n)
    assert apply(src.substitution, w).startswith(w)


def test_fibonacci_is_sturmian_to_10k():
    n = 10_000
    fib = fixed_point_prefix(builtin("fibonacci").substitution, n)[:n]
    assert fib == characteristic_sturmian_prefix([1], n)[:n]


@SETTINGS
@given(names, st.integers(0, 12), st.data())
def test_kirchhoff(tables, name, n, data):
    t = tables[name]
    w = data.draw(st.sampled_from(t.factors(n)))
    pairs = len(t.pairs(w))
    assert pairs == sum(len(t.right(a + w)) for a in t.left(w))
    assert pairs == sum(len(t.left(w + b)) for b in t.right(w))


@SETTINGS
@given(names, st.integers(0, 20))
def test_delta_and_second_difference(tables, name, n):
    t = tables[name]
    ws = t.factors(n)
    delta = F.delta_complexity(t, n)
    assert delta == sum(len(t.right(w)) - 1 for w in ws) == sum(len(t.left(w)) - 1 for w in ws)
    assert F.second_difference_identity(t, n)


@SETTINGS
@given(names, st.integers(0, 12), st.data())
def test_one_sided_order_zero(tables, name, n, data):
    t = tables[name]
    r = F.bilateral_order(t, data.draw(st.sampled_from(t.factors(n))))
    if not r.bispecial:
        assert r.order == 0
    if r.maximal_right_special:
        assert r.weak


@SETTINGS
@given(names, st.integers(0, 10), st.data())
def test_reduction_rules(sources, tables, name, n, data):
    src, t = sources[name], tables[name]
    w = data.draw(st.sampled_from(t.factors(n)))
    rw = return_set(src, w).as_set()
    right, left = t.right(w), t.left(w)
    if len(right) == 1:
        assert return_set(src, w + next(iter(right))).as_set() == rw
    if len(left) == 1:
        (a,) = left
        assert all(v.endswith(a) for v in rw)
        assert return_set(src, a + w).as_set() == {a + v[:-1] for v in rw}


@SETTINGS
@given(names, st.integers(0, 10), st.data())
def test_trie_matches_scan(sources, tables, name, n, data):
    t = tables[name]
    w = data.draw(st.sampled_from(t.factors(n)))
    trie = build_return_trie(t, w)
    assert trie.complete_return_words() == frozenset(return_set(sources[name], w).complete)
    assert trie_leaf_identity(trie)


@SETTINGS
@given(st.integers(0, 10), st.data())
def test_r4_phi_equivariance(sources, tables, n, data):
    phi = str.maketrans("1234", "4321")
    w = data.draw(st.sampled_from(tables["r4_example"].factors(n)))
    src = sources["r4_example"]
    assert return_set(src, w.translate(phi)).as_set() == {v.translate(phi) for v in return_set(src, w)}


@SETTINGS
@given(names, st.integers(1, 12), st.data())
def test_complete_return_words_shape(sources, tables, name, n, data):
    w = data.draw(st.sampled_from(tables[name].factors(n)))
    for c in return_set(sources[name], w).complete:
        assert c.startswith(w) and c.endswith(w)
        assert c.find(w, 1) == len(c) - len(w)


coeffs = st.lists(st.integers(0, 3), min_size=2, max_size=4).filter(lambda t: t[0] >= 1 and t[-1] >= 1)


@SETTINGS
@given(coeffs, st.integers(0, 3))
def test_beta_monotone(t, j):
    t = check_coefficients(t)
    j %= len(t)
    bumped = t[:j] + (t[j] + 1,) + t[j + 1:]
    assert dominant_root(bumped).value > dominant_root(t).value


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 4), st.integers(1, 3))
def test_arnoux_rauzy_case_unique_specials(m, k):
    t = (k,) * (m - 1) + (1,)
    table = F.build_factor_table(beta_source(t), 8)
    assert check_unique_special_criterion(table, m, 8)
