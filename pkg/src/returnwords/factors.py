"""Factor language up to a fixed length, extension data, complexity and
bilateral orders.

A table for maximal length ``N`` is backed by one finite prefix of the word.
The prefix is *certified*: the set of its factors of length ``N + 2`` (which
determines every shorter factor set) did not change between two consecutive
growth steps.  Extension data is computed only from occurrences that have a
letter on both sides, so the end of the prefix cannot invent extensions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import ConsistencyError, NotAFactorError, RangeError, SaturationError
from .words import MAX_PREFIX, WordSource

# Re-derive B(w) from the full formula even where it is forced to be 0.
DEBUG_CHECKS = False

NON_SPECIAL = "non-special"
LEFT_ONLY = "left-special-only"
RIGHT_ONLY = "right-special-only"
ORDINARY = "ordinary-bispecial"
WEAK = "weak-bispecial"
STRONG = "strong-bispecial"


def windows(text: str, n: int) -> set[str]:
    """All factors of length n of a finite word."""
    if n == 0:
        return {""}
    return {text[i:i + n] for i in range(len(text) - n + 1)}


@dataclass(frozen=True)
class Certificate:
    kind: str                 # "iterates" or "doubling"
    window: int               # length of the factors compared
    lengths: tuple[int, int]  # the two prefix lengths whose factor sets agreed
    margin: int               # both lengths exceed this

    def as_dict(self):
        return {"kind": self.kind, "window": self.window,
                "lengths": list(self.lengths), "margin": self.margin}


@dataclass
class FactorTable:
    source: WordSource
    max_length: int
    text: str
    certificate: Certificate
    _lang: dict[int, frozenset[str]] = field(default_factory=dict, repr=False)
    _ext: dict[int, dict[str, tuple[frozenset, frozenset, frozenset]]] = field(default_factory=dict, repr=False)

    @property
    def alphabet(self):
        return self.source.alphabet

    @property
    def certified_length(self) -> int:
        return self.max_length + 2

    def language(self, n: int) -> frozenset[str]:
        if not 0 <= n <= self.certified_length:
            raise RangeError(f"length {n} outside certified range 0..{self.certified_length}")
        if n not in self._lang:
            self._lang[n] = frozenset(windows(self.text, n))
        return self._lang[n]

    def factors(self, n: int) -> list[str]:
        """ℒ_n in canonical lexicographic order."""
        return sorted(self.language(n), key=self.alphabet.sort_key)

    def __contains__(self, w: str) -> bool:
        return len(w) <= self.certified_length and w in self.language(len(w))

    def _extensions(self, n: int):
        if not 0 <= n <= self.max_length:
            raise RangeError(f"extension data only for lengths 0..{self.max_length}, got {n}")
        if n not in self._ext:
            acc: dict[str, tuple[set, set, set]] = {w: (set(), set(), set()) for w in self.language(n)}
            for awb in self.language(n + 2):
                a, w, b = awb[0], awb[1:-1], awb[-1]
                left, right, pairs = acc[w]
                left.add(a)
                right.add(b)
                pairs.add((a, b))
            self._ext[n] = {w: (frozenset(l), frozenset(r), frozenset(p)) for w, (l, r, p) in acc.items()}
        return self._ext[n]

    def _entry(self, w: str):
        ext = self._extensions(len(w))
        try:
            return ext[w]
        except KeyError:
            raise NotAFactorError(f"{w!r} is not a factor") from None

    def left(self, w: str) -> frozenset[str]:
        return self._entry(w)[0]

    def right(self, w: str) -> frozenset[str]:
        return self._entry(w)[1]

    def pairs(self, w: str) -> frozenset[tuple[str, str]]:
        return self._entry(w)[2]

    def sorted_letters(self, letters) -> list[str]:
        return sorted(letters, key=self.alphabet.index)


def build_factor_table(src: WordSource, n: int) -> FactorTable:
    """Certified factor table for lengths up to n (language up to n + 2)."""
    if n < 1:
        raise RangeError("max length must be >= 1")
    window = n + 2
    margin = 4 * window
    prev_len = prev_set = None
    kind = "iterates" if src.is_substitutive else "doubling"
    for p in src.iterates(longer_than=margin):
        cur_set = windows(src.prefix(p), window)
        if prev_set is not None and cur_set == prev_set:
            src.saturation[n] = prev_len
            cert = Certificate(kind, window, (prev_len, p), margin)
            return FactorTable(src, n, src.prefix(prev_len), cert)
        prev_len, prev_set = p, cur_set
    raise SaturationError(f"factor set of length {window} did not stabilize below prefix length {MAX_PREFIX}")


def complexity(t: FactorTable, n: int) -> int:
    return len(t.language(n))


def delta_complexity(t: FactorTable, n: int) -> int:
    if n + 1 > t.certified_length:
        raise RangeError(f"ΔC({n}) needs C({n + 1}) beyond certified range")
    return complexity(t, n + 1) - complexity(t, n)


@dataclass(frozen=True)
class BilateralReport:
    factor: str
    left: tuple[str, ...]
    right: tuple[str, ...]
    pairs: tuple[tuple[str, str], ...]
    order: int
    cls: str
    maximal_right_special: bool
    maximal_left_special: bool

    @property
    def left_special(self):
        return len(self.left) >= 2

    @property
    def right_special(self):
        return len(self.right) >= 2

    @property
    def bispecial(self):
        return self.left_special and self.right_special

    @property
    def weak(self):
        return self.cls == WEAK

    def as_dict(self):
        return {"left": "".join(self.left), "right": "".join(self.right),
                "pairs": ["".join(p) for p in self.pairs], "B": self.order, "class": self.cls,
                "maximal_right_special": self.maximal_right_special,
                "maximal_left_special": self.maximal_left_special}


def _direct_order(n_pairs, n_left, n_right):
    return n_pairs - n_left - n_right + 1


def bilateral_order(t: FactorTable, w: str) -> BilateralReport:
    if len(w) > t.max_length:
        raise RangeError(f"|w| = {len(w)} exceeds table length {t.max_length}")
    left, right, pairs = t._entry(w)
    nl, nr, npairs = len(left), len(right), len(pairs)
    if nl >= 2 and nr >= 2:
        b = _direct_order(npairs, nl, nr)
        cls = WEAK if b < 0 else STRONG if b > 0 else ORDINARY
    else:
        b = 0
        cls = NON_SPECIAL if nl < 2 and nr < 2 else LEFT_ONLY if nl >= 2 else RIGHT_ONLY
        if DEBUG_CHECKS and _direct_order(npairs, nl, nr) != 0:
            raise ConsistencyError(f"one-sided factor {w!r} has nonzero bilateral order")

    # the two equivalent forms of B(w) < 0, evaluated from ℒ_{|w|+2}
    big = t.language(len(w) + 2)
    er_aw = {a: sum(a + w + c in big for c in t.alphabet) for a in left}
    el_wb = {c: sum(a + w + c in big for a in t.alphabet) for c in right}
    ineq_right = sum(k - 1 for k in er_aw.values()) < nr - 1
    ineq_left = sum(k - 1 for k in el_wb.values()) < nl - 1
    if ineq_right != (b < 0) or ineq_left != (b < 0):
        raise ConsistencyError(f"weak-bispecial characterizations disagree on {w!r}")

    max_right = nr >= 2 and sum(k - 1 for k in er_aw.values()) == 0
    max_left = nl >= 2 and sum(k - 1 for k in el_wb.values()) == 0
    if max_right and cls != WEAK:
        raise ConsistencyError(f"maximal right special {w!r} is not weak bispecial")
    return BilateralReport(
        factor=w,
        left=tuple(t.sorted_letters(left)),
        right=tuple(t.sorted_letters(right)),
        pairs=tuple(sorted(pairs, key=lambda p: (t.alphabet.index(p[0]), t.alphabet.index(p[1])))),
        order=b, cls=cls,
        maximal_right_special=max_right, maximal_left_special=max_left,
    )


def reports(t: FactorTable, n: int) -> Iterator[BilateralReport]:
    for w in t.factors(n):
        yield bilateral_order(t, w)


def second_difference_identity(t: FactorTable, n: int) -> bool:
    """ΔC(n+1) − ΔC(n) == Σ_{w ∈ ℒ_n} B(w)."""
    if n < 0 or n > t.max_length:
        raise RangeError(f"second difference at {n} needs lengths up to {n + 2}")
    lhs = delta_complexity(t, n + 1) - delta_complexity(t, n)
    rhs = sum(_direct_order(len(p), len(l), len(r)) for l, r, p in t._extensions(n).values())
    return lhs == rhs


def special_factors(t: FactorTable, n: int) -> list[BilateralReport]:
    """Left special, right special and bispecial factors of length n."""
    return [r for r in reports(t, n) if r.left_special or r.right_special]


def weak_bispecial_factors(t: FactorTable, max_len: int) -> list[BilateralReport]:
    return [r for n in range(max_len + 1) for r in special_factors(t, n) if r.weak]


def table_to_json(t: FactorTable, max_len: int | None = None) -> dict:
    top = t.max_length if max_len is None else max_len
    return {str(n): {w: bilateral_order(t, w).as_dict() for w in t.factors(n)} for n in range(top + 1)}
