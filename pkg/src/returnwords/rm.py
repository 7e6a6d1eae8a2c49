"""Bounded verification of property R_m (every factor has exactly m return
words) and of the structural statements built around it.

Everything here is checked up to a length bound; verdicts carry that bound.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import ConsistencyError, PreconditionError
from .factors import (FactorTable, bilateral_order, build_factor_table, complexity,
                      delta_complexity, special_factors)
from .returns import MIN_OCCURRENCES, SEARCH_LIMIT, default_depth_cap, occurrences, return_set
from .words import WordSource

METHODS = ("full", "bispecial")


class TheoremViolation(ConsistencyError):
    """An empirical result contradicts a proved statement; always a bug."""


@dataclass
class RmVerdict:
    m: int
    max_length: int
    holds: bool
    method: str
    witness: str | None = None
    witness_count: int | None = None
    eventually_periodic: bool = False
    # length -> [(bispecial factor, #returns)]
    bispecial_counts: dict[int, list[tuple[str, int]]] = field(default_factory=dict)
    certificate: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "holds" if self.holds else "fails"

    def as_dict(self):
        d = {"m": self.m, "max_length": self.max_length, "status": self.status, "method": self.method,
             "bispecial": {str(n): [{"factor": w, "returns": c} for w, c in rows]
                           for n, rows in self.bispecial_counts.items()},
             "certificate": self.certificate}
        if not self.holds:
            d["witness"] = {"factor": self.witness, "returns": self.witness_count,
                            "eventually_periodic": self.eventually_periodic}
        return d


class _Counter:
    """Memoized #ℛ(w) for one source."""

    def __init__(self, src: WordSource):
        self.src = src
        self.cache: dict[str, int] = {}

    def __call__(self, w: str) -> int:
        if w not in self.cache:
            self.cache[w] = len(return_set(self.src, w))
        return self.cache[w]


def _bispecial_rows(t: FactorTable, n: int, count) -> list[tuple[str, int]]:
    return [(r.factor, count(r.factor)) for r in special_factors(t, n) if r.bispecial]


class _Ancestors:
    """Memoized bispecial ancestors.

    A factor with a unique right (else left) extension is replaced by that
    extension, which keeps the number of return words.  Walks longer than the
    depth cap (as on eventually periodic words) give None.
    """

    def __init__(self, src: WordSource, t: FactorTable):
        self.src = src
        self.base = t
        self._prefix = ""
        self.memo: dict[str, str | None] = {}

    def __call__(self, w: str) -> str | None:
        path = []
        v = w
        cap = default_depth_cap(w)
        while v not in self.memo:
            if len(v) > cap:
                self.memo[v] = None
                break
            if len(v) > self.base.max_length:
                return self._walk_long(v, path, cap)
            path.append(v)
            right = self.base.right(v)
            left = self.base.left(v)
            if len(right) == 1:
                v = v + next(iter(right))
            elif len(left) == 1:
                v = next(iter(left)) + v
            else:
                self.memo[v] = v
                break
        return self._settle(path, self.memo[v])

    def _settle(self, path, anc):
        for u in path:
            self.memo[u] = anc
        return anc

    def _walk_long(self, v: str, path: list[str], cap: int) -> str | None:
        # past the base table: follow the occurrences of v through a prefix
        # holding at least MIN_OCCURRENCES of them
        p = len(self.base.text)
        while True:
            text = self._text(p)
            pos = occurrences(text, v)
            if len(pos) >= MIN_OCCURRENCES or p >= SEARCH_LIMIT:
                break
            p *= 2
        n = len(text)
        while v not in self.memo:
            if len(v) > cap or len(pos) < 2:
                return self._settle(path, None)
            path.append(v)
            k = len(v)
            pos = [i for i in pos if i + k < n]
            right = {text[i + k] for i in pos}
            left = {text[i - 1] for i in pos if i >= 1}
            if len(right) == 1:
                v += right.pop()
            elif len(left) == 1:
                v = left.pop() + v
                pos = [i - 1 for i in pos if i >= 1]
            else:
                return self._settle(path, v)
        return self._settle(path, self.memo[v])

    def _text(self, p: int) -> str:
        if len(self._prefix) < p:
            self._prefix = self.src.prefix(p)
        return self._prefix[:p] if len(self._prefix) > p else self._prefix


def check_rm(src: WordSource, m: int, max_len: int, method: str = "bispecial",
             table: FactorTable | None = None) -> RmVerdict:
    """Decide whether every factor of length <= max_len has exactly m return words.

    ``full`` counts return words of every factor.  ``bispecial`` counts them
    only for bispecial factors and transports the count to every other factor
    through its bispecial ancestor.  On failure the shortest, then
    lexicographically least, factor is reported.
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    t = table if table is not None and table.max_length >= max_len else build_factor_table(src, max_len)
    count = _Counter(src)
    verdict = RmVerdict(m, max_len, True, method, certificate=t.certificate.as_dict())
    ancestor = _Ancestors(src, t)
    for n in range(max_len + 1):
        verdict.bispecial_counts[n] = _bispecial_rows(t, n, count)
        for w in t.factors(n):
            if method == "full":
                c = count(w)
            else:
                anc = ancestor(w)
                c = count(anc if anc is not None else w)
            if c != m:
                verdict.holds = False
                verdict.witness = w
                verdict.witness_count = c
                verdict.eventually_periodic = c == 1
                return verdict
    return verdict


def check_unique_special_criterion(t: FactorTable, m: int, max_len: int) -> bool:
    """For each length, a unique left special factor with m left extensions or a
    unique right special factor with m right extensions."""
    for n in range(max_len + 1):
        specials = special_factors(t, n)
        ls = [r for r in specials if r.left_special]
        rs = [r for r in specials if r.right_special]
        ok_left = len(ls) == 1 and len(ls[0].left) == m
        ok_right = len(rs) == 1 and len(rs[0].right) == m
        if not (ok_left or ok_right):
            return False
    return True


def has_weak_bispecial(t: FactorTable, max_len: int) -> bool:
    return any(r.weak for n in range(max_len + 1) for r in special_factors(t, n))


def has_maximal_right_special(t: FactorTable, max_len: int) -> bool:
    return any(r.maximal_right_special for n in range(max_len + 1) for r in special_factors(t, n))


def exclusion_predicates_agree(t: FactorTable, max_len: int) -> bool:
    """Weak bispecial and maximal right special pick out the same factors.

    Expected on binary words and on words with ΔC ≡ 2.
    """
    for n in range(max_len + 1):
        for r in special_factors(t, n):
            if r.weak != r.maximal_right_special:
                return False
    return True


@dataclass
class Theorem1Report:
    m: int
    max_length: int
    no_weak_bispecial: bool
    affine_complexity: bool
    rm_holds: bool
    lemma_lower_checked: bool = False
    lemma_upper_checked: bool = False
    lemma_delta_checked: bool = False
    exclusion: str = "weak"

    @property
    def hypothesis_holds(self):
        return self.no_weak_bispecial

    def as_dict(self):
        return dict(self.__dict__)


def check_theorem1(src: WordSource, m: int, max_len: int, exclusion: str = "weak",
                   table: FactorTable | None = None) -> Theorem1Report:
    """Evaluate (no weak bispecial, C(n) = (m-1)n+1, R_m) up to max_len.

    When the first holds the other two must agree, and the return-word
    bounds 1 + ΔC(|w|) <= #ℛ(w) (and #ℛ(w) <= m when ΔC < m) must hold.
    Any contradiction raises TheoremViolation.  ``exclusion`` may be
    ``"maximal-right"`` to use maximal right special factors instead.
    """
    t = table if table is not None and table.max_length >= max_len else build_factor_table(src, max_len)
    if exclusion == "weak":
        free = not has_weak_bispecial(t, max_len)
    elif exclusion == "maximal-right":
        free = not has_maximal_right_special(t, max_len)
    else:
        raise ValueError("exclusion must be 'weak' or 'maximal-right'")
    affine = all(complexity(t, n) == (m - 1) * n + 1 for n in range(max_len + 1))
    rm = check_rm(src, m, max_len, method="full", table=t).holds
    report = Theorem1Report(m, max_len, free, affine, rm, exclusion=exclusion)
    if not free:
        return report

    if affine != rm:
        raise TheoremViolation(
            f"{src}: no {exclusion} factor up to {max_len} but C affine={affine} while R_{m}={rm}")
    deltas = [delta_complexity(t, n) for n in range(max_len + 1)]
    count = _Counter(src)
    bounded = max(deltas) < m
    for n in range(max_len + 1):
        for w in t.factors(n):
            c = count(w)
            if c < 1 + deltas[n]:
                raise TheoremViolation(f"#R({w!r}) = {c} < 1 + ΔC({n}) = {1 + deltas[n]}")
            if bounded and c > m:
                raise TheoremViolation(f"#R({w!r}) = {c} > {m} although ΔC < {m}")
    report.lemma_lower_checked = True
    report.lemma_upper_checked = bounded
    if rm:
        if min(deltas) < m - 1:
            raise TheoremViolation(f"R_{m} without weak bispecials but ΔC drops below {m - 1}")
        report.lemma_delta_checked = True
    return report


@dataclass(frozen=True)
class ProductWitness:
    factor: str
    w1: str
    w2: str
    v: tuple[str, str, str, str]

    def as_dict(self):
        return {"factor": self.factor, "w1": self.w1, "w2": self.w2, "v": list(self.v)}


def _product_splits(r1: frozenset[str], r2: frozenset[str]):
    """Yield (v1, v2, v3, v4) with r1 = {v1,v2}{v3,v4} and r2 = {v3,v4}{v1,v2}."""
    if len(r1) != 4 or len(r2) != 4:
        return
    for r in sorted(r1):
        for i in range(1, len(r)):
            v1, v3 = r[:i], r[i:]
            for r_b in r1:
                if r_b == r or not r_b.startswith(v1) or len(r_b) == len(v1):
                    continue
                v4 = r_b[len(v1):]
                for r_c in r1:
                    if r_c == r or not r_c.endswith(v3) or len(r_c) == len(v3):
                        continue
                    v2 = r_c[:-len(v3)]
                    if v1 == v2 or v3 == v4:
                        continue
                    if {v1 + v3, v1 + v4, v2 + v3, v2 + v4} != r1:
                        continue
                    if {v3 + v1, v3 + v2, v4 + v1, v4 + v2} == r2:
                        yield v1, v2, v3, v4


def check_product_structure(src: WordSource, w: str, m: int = 4, rm_bound: int = 8,
                            table: FactorTable | None = None) -> ProductWitness | None:
    """Search the one-letter extensions of a weak bispecial factor of an R_4
    word for the product structure of their return sets.

    None on an R_4 word contradicts the known structure and should be
    reported as a bug.
    """
    need = max(rm_bound, len(w) + 1)
    t = table if table is not None and table.max_length >= need else build_factor_table(src, need)
    rep = bilateral_order(t, w)
    if not rep.weak:
        raise PreconditionError(f"{w!r} is {rep.cls}, not weak bispecial")
    verdict = check_rm(src, m, rm_bound, table=t)
    if not verdict.holds:
        raise PreconditionError(f"{src} fails R_{m} at {verdict.witness!r}; absence would mean nothing")
    candidates = [a + w for a in rep.left] + [w + b for b in rep.right]
    sets = {c: return_set(src, c).as_set() for c in candidates}
    for w1, w2 in itertools.permutations(candidates, 2):
        for v in _product_splits(sets[w1], sets[w2]):
            return ProductWitness(w, w1, w2, v)
    return None
