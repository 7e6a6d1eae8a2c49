"""β-substitutions 0 -> 0^{t1} 1, ..., m-1 -> 0^{tm}, Parry admissibility,
β-integers and the distance coding of consecutive β-integers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import NumericPrecisionError, ParameterError, PreconditionError
from .words import Alphabet, Substitution, WordSource, fixed_point_prefix

ROOT_TOL = 1e-12
GAP_TOL = 1e-9
SEPARATION = 1e-6


def check_coefficients(t: Sequence[int]) -> tuple[int, ...]:
    t = tuple(int(x) for x in t)
    if len(t) < 2:
        raise ParameterError("need m >= 2 coefficients")
    if len(t) > 10:
        raise ParameterError("at most 10 coefficients (alphabet 0..9)")
    if t[0] < 1 or t[-1] < 1 or any(x < 0 for x in t):
        raise ParameterError(f"need t1, tm >= 1 and all t_j >= 0, got {t}")
    return t


def parse_coefficients(text: str) -> tuple[int, ...]:
    try:
        return check_coefficients(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ParameterError(f"bad coefficient list {text!r}: {exc}") from None


def build_beta_substitution(t: Sequence[int]) -> Substitution:
    t = check_coefficients(t)
    m = len(t)
    letters = [str(k) for k in range(m)]
    images = {str(k): "0" * t[k] + (str(k + 1) if k < m - 1 else "") for k in range(m)}
    return Substitution(Alphabet.of(letters), images, "0")


def beta_source(t: Sequence[int]) -> WordSource:
    t = check_coefficients(t)
    return WordSource.from_substitution(build_beta_substitution(t), name="beta(" + ",".join(map(str, t)) + ")")


def _lex_less(x: Sequence[int], y: Sequence[int]) -> bool:
    """Strict lexicographic order; a proper prefix is smaller."""
    return tuple(x) < tuple(y)


def is_parry_simple(t: Sequence[int]) -> bool:
    t = check_coefficients(t)
    return all(_lex_less(t[j:], t) for j in range(1, len(t)))


def satisfies_rm_conditions(t: Sequence[int]) -> bool:
    """t_m = 1 and every rotation t_j..t_{m-1} t_1..t_{j-1} is <= t_1..t_{m-1}."""
    t = check_coefficients(t)
    if t[-1] != 1:
        return False
    head = t[:-1]
    return all(head[j:] + head[:j] <= head for j in range(1, len(head)))


def is_arnoux_rauzy_case(t: Sequence[int]) -> bool:
    t = check_coefficients(t)
    return len(set(t[:-1])) == 1


def _poly(t, x):
    # x^m - t1 x^{m-1} - ... - tm
    acc = 1.0
    for c in t:
        acc = acc * x - c
    return acc


def _dpoly(t, x):
    m = len(t)
    acc = float(m)
    for i, c in enumerate(t[:-1], 1):
        acc = acc * x - (m - i) * c
    return acc


@dataclass(frozen=True)
class Root:
    value: float
    residual: float

    def __float__(self):
        return self.value


def dominant_root(t: Sequence[int]) -> Root:
    """The root of x^m - t1 x^{m-1} - ... - tm in (1, 1 + Σ t]: bisection then one Newton step."""
    t = check_coefficients(t)
    lo, hi = 1.0, 1.0 + sum(t)
    while hi - lo > ROOT_TOL:
        mid = 0.5 * (lo + hi)
        if _poly(t, mid) > 0:
            hi = mid
        else:
            lo = mid
    x = 0.5 * (lo + hi)
    d = _dpoly(t, x)
    if d:
        x -= _poly(t, x) / d
    return Root(x, abs(_poly(t, x)))


def distances(t: Sequence[int], beta: float | None = None) -> list[float]:
    """Gap length coded by letter k: t_{k+1}/β + ... + t_m/β^{m-k}."""
    t = check_coefficients(t)
    b = dominant_root(t).value if beta is None else beta
    m = len(t)
    return [sum(t[i] / b ** (i - k + 1) for i in range(k, m)) for k in range(m)]


@dataclass
class BetaSpec:
    coefficients: tuple[int, ...]
    beta: float = field(init=False)
    residual: float = field(init=False)
    parry_simple: bool = field(init=False)
    rm_conditions: bool = field(init=False)
    arnoux_rauzy_case: bool = field(init=False)

    def __post_init__(self):
        self.coefficients = check_coefficients(self.coefficients)
        root = dominant_root(self.coefficients)
        self.beta, self.residual = root.value, root.residual
        self.parry_simple = is_parry_simple(self.coefficients)
        self.rm_conditions = satisfies_rm_conditions(self.coefficients)
        self.arnoux_rauzy_case = is_arnoux_rauzy_case(self.coefficients)

    @property
    def m(self):
        return len(self.coefficients)

    def as_dict(self):
        return {"coefficients": list(self.coefficients), "m": self.m, "beta": self.beta,
                "residual": self.residual, "parry_simple": self.parry_simple,
                "rm_conditions": self.rm_conditions, "arnoux_rauzy_case": self.arnoux_rauzy_case,
                "distances": distances(self.coefficients, self.beta)}


def _blocked(digits: tuple[int, ...], t: tuple[int, ...]) -> bool:
    """True once some suffix x_j..x_0 can no longer stay strictly below t1..tm.

    A window that already exceeds the matching prefix of t, or equals all of
    t, stays non-admissible however the string is continued.
    """
    m = len(t)
    for i in range(len(digits)):
        seg = digits[i:i + m]
        if seg > t[:len(seg)] or seg == t:
            return True
    return False


def _admissible_strings(t: tuple[int, ...]):
    """Admissible digit strings in increasing value: by length, then lexicographically."""
    yield (0,)
    length = 1
    while True:
        stack = [(d,) for d in range(t[0], 0, -1)]
        while stack:
            s = stack.pop()
            if _blocked(s, t):
                continue
            if len(s) == length:
                yield s
            else:
                stack.extend(s + (d,) for d in range(t[0], -1, -1))
        length += 1


@dataclass
class BetaIntegerList:
    coefficients: tuple[int, ...]
    beta: float
    digits: list[tuple[int, ...]]
    values: list[float]
    gap_letters: list[int]

    @property
    def gap_word(self) -> str:
        return "".join(map(str, self.gap_letters))


def _classify(gap: float, table: list[float]) -> int:
    best = min(range(len(table)), key=lambda k: abs(gap - table[k]))
    if abs(gap - table[best]) > GAP_TOL:
        raise NumericPrecisionError(f"gap {gap!r} matches no distance within {GAP_TOL}")
    if any(k != best and abs(gap - table[k]) < SEPARATION for k in range(len(table))):
        raise NumericPrecisionError(f"gap {gap!r} is ambiguous between distances")
    return best


def beta_integers(t: Sequence[int], count: int) -> BetaIntegerList:
    """The ``count`` smallest nonnegative β-integers with their digit strings."""
    t = check_coefficients(t)
    if not is_parry_simple(t):
        raise PreconditionError(f"{t} is not a simple Parry digit vector")
    beta = dominant_root(t).value
    table = distances(t, beta)
    for i, a in enumerate(table):
        for b in table[i + 1:]:
            if abs(a - b) < SEPARATION:
                raise NumericPrecisionError("gap distances are not separated")
    digits, values = [], []
    for s in _admissible_strings(t):
        if len(digits) >= count:
            break
        v = 0.0
        for d in s:
            v = v * beta + d
        digits.append(s)
        values.append(v)
    for a, b in zip(values, values[1:]):
        if not b > a:
            raise NumericPrecisionError("β-integers are not strictly increasing")
    gaps = [_classify(b - a, table) for a, b in zip(values, values[1:])]
    return BetaIntegerList(t, beta, digits, values, gaps)


def gap_word_matches_fixed_point(t: Sequence[int], n: int) -> bool:
    t = check_coefficients(t)
    if not is_parry_simple(t):
        raise PreconditionError(f"{t} is not a simple Parry digit vector")
    gaps = beta_integers(t, n + 1).gap_word
    return gaps == fixed_point_prefix(build_beta_substitution(t), n)[:n]


def coefficient_grid(max_m: int = 4, max_t: int = 3):
    """All vectors with 2 <= m <= max_m, 1 <= t1, tm <= max_t and 0 <= middle <= max_t."""
    for m in range(2, max_m + 1):
        for first in range(1, max_t + 1):
            for mid in itertools.product(range(max_t + 1), repeat=m - 2):
                for last in range(1, max_t + 1):
                    yield (first, *mid, last)
