"""Return words by occurrence scanning, and the tree of return words.

Scanning is authoritative.  The trie is built from the certified factor
language only, so it serves as an independent cross-check.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import (ConsistencyError, NotAFactorError, ReductionNotApplicable,
                     StabilizationError, TrieCapError)
from .factors import FactorTable, build_factor_table
from .words import MAX_PREFIX, WordSource

# give up looking for occurrences beyond this prefix length
SEARCH_LIMIT = 1 << 22
# before comparing windows P and 2P: enough occurrences, and P long against every return word
MIN_OCCURRENCES = 64
LENGTH_FACTOR = 32


def occurrences(prefix: str, w: str) -> list[int]:
    """All (overlapping) positions of w in prefix; every position for the empty word."""
    if not w:
        return list(range(len(prefix) + 1))
    out = []
    i = prefix.find(w)
    while i >= 0:
        out.append(i)
        i = prefix.find(w, i + 1)
    return out


def _returns_in(prefix: str, w: str):
    occ = occurrences(prefix, w)
    first_seen: dict[str, int] = {}
    for j, k in zip(occ, occ[1:]):
        v = prefix[j:k]
        if v not in first_seen:
            first_seen[v] = j
    return occ, first_seen


@dataclass(frozen=True)
class ReturnSet:
    factor: str
    returns: tuple[str, ...]
    certificate: tuple[int, int]
    occurrences_used: int

    @property
    def complete(self) -> tuple[str, ...]:
        return tuple(v + self.factor for v in self.returns)

    @property
    def eventually_periodic(self) -> bool:
        """A single return word means the word is eventually periodic."""
        return len(self.returns) == 1

    def __len__(self):
        return len(self.returns)

    def __iter__(self):
        return iter(self.returns)

    def as_set(self) -> frozenset[str]:
        return frozenset(self.returns)

    def as_dict(self):
        return {"factor": self.factor, "returns": list(self.returns), "complete": list(self.complete),
                "count": len(self.returns), "certificate": list(self.certificate),
                "occurrences": self.occurrences_used, "eventually_periodic": self.eventually_periodic}


def default_scan_length(w: str) -> int:
    return max(4096, 128 * (len(w) + 1))


def return_set(src: WordSource, w: str, start: int | None = None,
               table: FactorTable | None = None) -> ReturnSet:
    """Return words of w read off successive occurrences.

    The set is accepted once prefixes of length P and 2P give the same set,
    where P holds at least MIN_OCCURRENCES occurrences and is LENGTH_FACTOR
    times longer than every return word seen.  The trailing piece after the
    last occurrence is never counted.
    """
    src.alphabet.check(w)
    if table is not None and len(w) <= table.certified_length and w not in table:
        raise NotAFactorError(f"{w!r} is not a factor of {src}")
    p = start or default_scan_length(w)
    while True:
        if 2 * p > MAX_PREFIX:
            raise StabilizationError(f"return words of {w!r} did not stabilize below {MAX_PREFIX}")
        occ, found = _returns_in(src.prefix(p), w)
        longest = max(map(len, found), default=0)
        if len(occ) < MIN_OCCURRENCES or p < LENGTH_FACTOR * longest:
            if len(occ) < 2 and p >= SEARCH_LIMIT:
                if not occ:
                    raise NotAFactorError(f"{w!r} does not occur in the first {p} letters of {src}")
                raise StabilizationError(f"{w!r} occurs only once in the first {p} letters")
            p *= 2
            continue
        _, found2 = _returns_in(src.prefix(2 * p), w)
        if found.keys() == found2.keys():
            ordered = sorted(found, key=lambda v: (found[v], src.alphabet.sort_key(v)))
            return ReturnSet(w, tuple(ordered), (p, 2 * p), len(occ))
        p *= 2


@dataclass
class ReturnTrie:
    root: str
    children: dict[str, list[str]]
    leaves: list[str]
    depth_cap: int
    table: FactorTable = field(repr=False)

    @property
    def internal(self) -> list[str]:
        return [v for v in self.children if v not in self._leafset]

    @property
    def _leafset(self):
        return set(self.leaves)

    @property
    def nodes(self) -> list[str]:
        return list(self.children)

    def complete_return_words(self) -> frozenset[str]:
        return frozenset(self.leaves)

    def return_words(self) -> frozenset[str]:
        k = len(self.root)
        return frozenset(v[:len(v) - k] for v in self.leaves)


def default_depth_cap(w: str) -> int:
    return 64 * len(w) + 256


def build_return_trie(table: FactorTable, w: str, depth_cap: int | None = None) -> ReturnTrie:
    """Expand w by right extensions until w reappears as a proper suffix.

    The backing table is rebuilt with a larger maximal length whenever a
    node outgrows it.
    """
    cap = default_depth_cap(w) if depth_cap is None else depth_cap
    if cap < len(w):
        raise ValueError("depth_cap must be >= |w|")
    if w not in table:
        raise NotAFactorError(f"{w!r} is not a factor")
    children: dict[str, list[str]] = {}
    leaves: list[str] = []
    queue = deque([w])
    while queue:
        v = queue.popleft()
        if len(v) > len(w) and v.endswith(w):
            children[v] = []
            leaves.append(v)
            continue
        if len(v) >= cap:
            raise TrieCapError(f"return trie of {w!r} exceeded depth cap {cap}")
        if len(v) > table.max_length:
            table = build_factor_table(table.source, max(2 * table.max_length, len(v) + 8))
        kids = [v + b for b in table.sorted_letters(table.right(v))]
        children[v] = kids
        queue.extend(kids)
    leaves.sort(key=table.alphabet.length_lex_key)
    return ReturnTrie(w, children, leaves, cap, table)


def trie_leaf_identity(trie: ReturnTrie) -> bool:
    """#leaves == 1 + Σ over internal nodes of (#children − 1)."""
    leafset = set(trie.leaves)
    branching = sum(len(kids) - 1 for v, kids in trie.children.items() if v not in leafset)
    return len(trie.leaves) == 1 + branching


def trie_to_dot(trie: ReturnTrie, name: str = "returns") -> str:
    leafset = set(trie.leaves)
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  edge [arrowhead=none];"]
    ids = {v: f"n{i}" for i, v in enumerate(trie.children)}
    for v, nid in ids.items():
        shape = "doublecircle" if v in leafset else "circle"
        lines.append(f'  {nid} [label="{v or "ε"}", shape={shape}];')
    for v, kids in trie.children.items():
        for k in kids:
            lines.append(f"  {ids[v]} -> {ids[k]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _table_for(src: WordSource, w: str, table: FactorTable | None) -> FactorTable:
    if table is not None and len(w) <= table.max_length:
        return table
    return build_factor_table(src, max(len(w), 1))


def reduce_right(src: WordSource, w: str, table: FactorTable | None = None) -> ReturnSet:
    """ℛ(wb) obtained from ℛ(w) when b is the only right extension of w."""
    t = _table_for(src, w, table)
    right = t.right(w)
    if len(right) != 1:
        raise ReductionNotApplicable(f"{w!r} has {len(right)} right extensions")
    (b,) = right
    rs = return_set(src, w)
    return ReturnSet(w + b, rs.returns, rs.certificate, rs.occurrences_used)


def conjugate_left(src: WordSource, a: str, w: str, table: FactorTable | None = None) -> ReturnSet:
    """ℛ(aw) = {a v a⁻¹ : v ∈ ℛ(w)} when a is the only left extension of w."""
    t = _table_for(src, w, table)
    left = t.left(w)
    if left != {a}:
        raise ReductionNotApplicable(f"left extensions of {w!r} are {sorted(left)}, not just {a!r}")
    rs = return_set(src, w)
    moved = []
    for v in rs.returns:
        if not v.endswith(a):
            raise ConsistencyError(f"return word {v!r} of {w!r} does not end with {a!r}")
        moved.append(a + v[:-1])
    return ReturnSet(a + w, tuple(moved), rs.certificate, rs.occurrences_used)
