"""Finite prefixes of infinite words: substitution fixed points, characteristic
Sturmian words and eventually periodic words.

Words are plain ``str`` objects, one character per letter.  Alphabets hold at
most ten letters, so digits are enough for every built-in example.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import ConstructionError, DomainError, ParameterError

MAX_ALPHABET = 10
MAX_PREFIX = 10**8


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise DomainError("alphabet must be non-empty")
        if len(set(letters)) != len(letters):
            raise DomainError(f"duplicate letters in alphabet {letters!r}")
        if len(letters) > MAX_ALPHABET:
            raise DomainError(f"alphabet size {len(letters)} exceeds {MAX_ALPHABET}")
        for a in letters:
            if not isinstance(a, str) or len(a) != 1:
                raise DomainError(f"letters must be single characters, got {a!r}")

    @classmethod
    def of(cls, letters: Iterable[str] | str) -> "Alphabet":
        return cls(tuple(letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, a):
        return a in self.letters

    def index(self, a: str) -> int:
        return self.letters.index(a)

    def sort_key(self, word: str) -> tuple[int, ...]:
        """Key for lexicographic order in declaration order of the letters."""
        order = {a: i for i, a in enumerate(self.letters)}
        return tuple(order[c] for c in word)

    def length_lex_key(self, word: str):
        return (len(word), self.sort_key(word))

    def check(self, word: str) -> str:
        bad = set(word) - set(self.letters)
        if bad:
            raise DomainError(f"letters {sorted(bad)} not in alphabet {''.join(self.letters)}")
        return word

    def __str__(self):
        return "".join(self.letters)


@dataclass(frozen=True)
class Substitution:
    """A letter-to-word map with a seed letter whose image starts with itself."""

    alphabet: Alphabet
    images: dict[str, str]
    seed: str

    def __post_init__(self):
        images = dict(self.images)
        object.__setattr__(self, "images", images)
        if set(images) != set(self.alphabet):
            missing = set(self.alphabet) - set(images)
            extra = set(images) - set(self.alphabet)
            raise ConstructionError(f"rules do not match alphabet (missing {sorted(missing)}, unknown {sorted(extra)})")
        for a, img in images.items():
            if not img:
                raise ConstructionError(f"image of {a!r} is empty")
            self.alphabet.check(img)
        if self.seed not in self.alphabet:
            raise ConstructionError(f"seed {self.seed!r} not in alphabet")
        img = images[self.seed]
        if not img.startswith(self.seed) or len(img) < 2:
            raise ConstructionError(
                f"seed condition violated: image of {self.seed!r} is {img!r}, "
                "it must start with the seed and have length >= 2")

    @classmethod
    def from_rules(cls, rules: dict[str, str], seed: str | None = None,
                   alphabet: Iterable[str] | None = None) -> "Substitution":
        alpha = Alphabet.of(alphabet if alphabet is not None else rules.keys())
        return cls(alpha, rules, seed if seed is not None else alpha.letters[0])

    @property
    def incidence_matrix(self) -> np.ndarray:
        """M[b, c] = number of occurrences of letter b in the image of letter c."""
        letters = self.alphabet.letters
        m = np.zeros((len(letters), len(letters)), dtype=np.int64)
        for j, c in enumerate(letters):
            for i, b in enumerate(letters):
                m[i, j] = self.images[c].count(b)
        return m

    def __call__(self, word: str) -> str:
        return apply(self, word)

    def __str__(self):
        return ", ".join(f"{a}->{self.images[a]}" for a in self.alphabet)


def apply(s: Substitution, w: str) -> str:
    s.alphabet.check(w)
    return "".join(map(s.images.__getitem__, w))


def fixed_point_iterates(s: Substitution):
    """Yield seed, s(seed), s^2(seed), ... (each a proper prefix of the next)."""
    w = s.seed
    while True:
        yield w
        nxt = apply(s, w)
        if len(nxt) <= len(w):
            raise ConstructionError("substitution does not grow on the seed orbit")
        w = nxt


def fixed_point_prefix(s: Substitution, min_len: int) -> str:
    """Smallest iterate s^k(seed) with length >= min_len."""
    if min_len < 1:
        raise ParameterError("min_len must be >= 1")
    if min_len > MAX_PREFIX:
        raise ParameterError(f"min_len exceeds the prefix guard {MAX_PREFIX}")
    for w in fixed_point_iterates(s):
        if len(w) >= min_len:
            return w


def is_primitive(s: Substitution) -> bool:
    """Some power k <= (d-1)^2 + 1 of the incidence matrix is positive (Wielandt bound)."""
    m = (s.incidence_matrix > 0).astype(np.int64)
    d = m.shape[0]
    p = m.copy()
    for _ in range((d - 1) ** 2 + 1):
        if (p > 0).all():
            return True
        p = ((p @ m) > 0).astype(np.int64)
    return False


def _directive(directives: Sequence[int], k: int) -> int:
    # finite inputs repeat periodically
    return directives[(k - 1) % len(directives)]


def _check_directives(directives: Sequence[int]) -> tuple[int, ...]:
    d = tuple(int(x) for x in directives)
    if not d:
        raise ParameterError("directive sequence must be non-empty")
    if d[0] < 0 or any(x <= 0 for x in d[1:]):
        raise ParameterError(f"directives must be >= 1 (the first may be 0): {d}")
    if len(d) > 1 or d[0] > 0:
        return d
    raise ParameterError("a lone directive 0 repeats 0 and gives no word")


def characteristic_sturmian_prefix(directives: Sequence[int], min_len: int) -> str:
    """Standard-word recursion s_k = s_{k-1}^{d_k} s_{k-2}, s_{-1}='1', s_0='0'.

    Returns the first standard word of length >= min_len that is a prefix of the
    limit word (s_0 is skipped when the first directive is 0).
    """
    d = _check_directives(directives)
    if min_len < 1:
        raise ParameterError("min_len must be >= 1")
    if min_len > MAX_PREFIX:
        raise ParameterError(f"min_len exceeds the prefix guard {MAX_PREFIX}")
    prev, cur = "1", "0"
    if d[0] >= 1 and min_len <= 1:
        return cur
    k = 0
    while True:
        k += 1
        dk = _directive(d, k)
        if k > 1 and dk == 0:
            raise ParameterError("directive 0 is only allowed in first position")
        prev, cur = cur, cur * dk + prev
        if len(cur) >= min_len and (k >= 2 or d[0] >= 1):
            return cur


@dataclass
class WordSource:
    """Reproducible generator of prefixes of one infinite word.

    The cached prefix only ever grows by appending, so concurrent readers are
    safe; growth itself must be serialized by the caller.
    """

    kind: str
    name: str
    alphabet: Alphabet
    substitution: Substitution | None = None
    directives: tuple[int, ...] | None = None
    preperiod: str = ""
    period: str = ""
    _cache: str = field(default="", repr=False)
    _iterates: list[int] = field(default_factory=list, repr=False)
    saturation: dict[int, int] = field(default_factory=dict, repr=False)

    KINDS = ("substitution-fixed-point", "characteristic-sturmian", "explicit-eventually-periodic")

    @classmethod
    def from_substitution(cls, s: Substitution, name: str = "substitution") -> "WordSource":
        return cls("substitution-fixed-point", name, s.alphabet, substitution=s)

    @classmethod
    def sturmian(cls, directives: Sequence[int], name: str | None = None) -> "WordSource":
        d = _check_directives(directives)
        return cls("characteristic-sturmian", name or "sturmian(" + ",".join(map(str, d)) + ")",
                   Alphabet.of("01"), directives=d)

    @classmethod
    def periodic(cls, period: str, preperiod: str = "", alphabet: Iterable[str] | None = None,
                 name: str | None = None) -> "WordSource":
        if not period:
            raise ParameterError("period must be non-empty")
        letters = alphabet if alphabet is not None else sorted(set(preperiod + period))
        alpha = Alphabet.of(letters)
        alpha.check(preperiod + period)
        return cls("explicit-eventually-periodic", name or f"{preperiod}({period})^inf", alpha,
                   preperiod=preperiod, period=period)

    @property
    def is_substitutive(self) -> bool:
        return self.kind == "substitution-fixed-point"

    def prefix(self, n: int) -> str:
        """The first n letters of the word."""
        if n < 0:
            raise ParameterError("prefix length must be >= 0")
        if n > MAX_PREFIX:
            raise ParameterError(f"prefix length {n} exceeds guard {MAX_PREFIX}")
        if len(self._cache) < n:
            self._grow(n)
        return self._cache[:n]

    def _grow(self, n: int) -> None:
        if self.kind == "substitution-fixed-point":
            self._cache = fixed_point_prefix(self.substitution, n)
        elif self.kind == "characteristic-sturmian":
            self._cache = characteristic_sturmian_prefix(self.directives, n)
        else:
            reps = max(0, -(-(n - len(self.preperiod)) // len(self.period)))
            self._cache = self.preperiod + self.period * reps

    def iterates(self, longer_than: int = 0):
        """Yield successive prefix lengths that are natural growth points.

        For substitutions these are |s^k(seed)|; otherwise doubling lengths.
        Only lengths > ``longer_than`` are produced.
        """
        if self.kind == "substitution-fixed-point":
            for w in fixed_point_iterates(self.substitution):
                if len(w) > MAX_PREFIX:
                    return
                if len(w) > longer_than:
                    if len(self._cache) < len(w):
                        self._cache = w
                    yield len(w)
        else:
            p = max(64, longer_than + 1)
            while p <= MAX_PREFIX:
                yield p
                p *= 2

    def __str__(self):
        return self.name


# built-in words

BUILTIN_RULES: dict[str, tuple[dict[str, str], str]] = {
    "fibonacci": ({"0": "01", "1": "0"}, "0"),
    "tribonacci": ({"0": "01", "1": "02", "2": "0"}, "0"),
    "thue_morse": ({"0": "01", "1": "10"}, "0"),
    "chacon_recoded": ({"1": "12", "2": "312", "3": "3312"}, "1"),
    "r4_example": ({"1": "13231", "2": "13231424131", "3": "42324131424", "4": "42324"}, "1"),
}


def builtin(name: str) -> WordSource:
    try:
        rules, seed = BUILTIN_RULES[name]
    except KeyError:
        raise ParameterError(f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_RULES)}") from None
    return WordSource.from_substitution(Substitution.from_rules(rules, seed), name=name)


# substitution text format

_RULE = re.compile(r"^\s*(\S)\s*->\s*(\S+)\s*$")


def parse_substitution(text: str) -> Substitution:
    """Parse ``alphabet: ...`` / ``a -> word`` / ``seed: a`` lines.

    Blank lines and ``#`` comments are ignored.  The alphabet may be written
    as a run of characters (``0123``) or separated by spaces or commas.
    """
    alphabet = None
    rules: dict[str, str] = {}
    seed = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if sep and key in ("alphabet", "seed"):
            value = value.strip()
            if key == "alphabet":
                if alphabet is not None:
                    raise ConstructionError(f"line {lineno}: alphabet declared twice")
                parts = re.split(r"[\s,]+", value) if re.search(r"[\s,]", value) else list(value)
                alphabet = Alphabet.of(p for p in parts if p)
            else:
                seed = value
            continue
        m = _RULE.match(line)
        if not m:
            raise ConstructionError(f"line {lineno}: cannot parse {raw!r}")
        a, img = m.groups()
        if a in rules:
            raise ConstructionError(f"line {lineno}: duplicate rule for {a!r}")
        rules[a] = img
    if alphabet is None:
        raise ConstructionError("missing 'alphabet:' line")
    for a, img in rules.items():
        if a not in alphabet:
            raise ConstructionError(f"rule for unknown letter {a!r}")
        alphabet.check(img)
    return Substitution(alphabet, rules, seed if seed is not None else alphabet.letters[0])


def format_substitution(s: Substitution) -> str:
    lines = [f"alphabet: {s.alphabet}"]
    lines += [f"{a} -> {s.images[a]}" for a in s.alphabet]
    lines.append(f"seed: {s.seed}")
    return "\n".join(lines) + "\n"

