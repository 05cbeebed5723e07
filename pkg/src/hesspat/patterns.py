"""Associated patterns: classical patterns plus index constraints through h.

Each pattern is data: its value order (the pattern word itself, read at the
witness positions i < j < k < l [< m]) and a list of chained inequalities
between positions and values of h.  One evaluator serves all eleven.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from typing import Callable, Sequence

from .hessenberg import HessenbergFunction, _check_sizes
from .perm_core import Permutation

SLOTS = "ijklm"


@dataclass(frozen=True)
class AssociatedPattern:
    name: str
    order: tuple[int, ...]  # value ranks at the witness positions
    constraints: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.order)


PATTERNS: dict[str, AssociatedPattern] = {
    p.name: p
    for p in [
        AssociatedPattern("2143h", (2, 1, 4, 3), ("l<=h(i)",)),
        AssociatedPattern("1324h", (1, 3, 2, 4), ("l<=h(j)", "k<=h(i)")),
        AssociatedPattern("1243h", (1, 2, 4, 3), ("l<=h(j)", "j<=h(i)<l")),
        AssociatedPattern("2134h", (2, 1, 3, 4), ("l<=h(k)", "k<=h(i)<l")),
        AssociatedPattern("1423h", (1, 4, 2, 3), ("l<=h(j)", "k<=h(i)<l")),
        AssociatedPattern("2314h", (2, 3, 1, 4), ("l<=h(j)", "k<=h(i)<l")),
        AssociatedPattern("2413h", (2, 4, 1, 3), ("j<=h(i)<k<=h(j)<l<=h(k)",)),
        AssociatedPattern("25314h", (2, 5, 3, 1, 4), ("k<=h(i)<l<=h(j)<m<=h(k)",)),
        AssociatedPattern("24315h", (2, 4, 3, 1, 5), ("k<=h(i)<l<=h(j)<m<=h(k)",)),
        AssociatedPattern("14325h", (1, 4, 3, 2, 5), ("k<=h(i)<l<=h(j)<m<=h(k)",)),
        AssociatedPattern("15324h", (1, 5, 3, 2, 4), ("k<=h(i)<l<=h(j)<m<=h(k)",)),
    ]
}

GENERATOR7: tuple[str, ...] = ("2143h", "1324h", "1243h", "2134h", "1423h", "2314h", "2413h")
GENERAL10: tuple[str, ...] = (
    "2143h", "1324h", "1243h", "2134h", "1423h", "2314h",
    "25314h", "24315h", "14325h", "15324h",
)
SIX: tuple[str, ...] = GENERAL10[:6]
FIVE_PATTERNS: tuple[str, ...] = GENERAL10[6:]
SIX_PLUS_25314: tuple[str, ...] = SIX + ("25314h",)

PATTERN_SETS: dict[str, tuple[str, ...]] = {"generator7": GENERATOR7, "general10": GENERAL10}


@dataclass(frozen=True)
class PatternWitness:
    pattern: str
    indices: tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ",".join(str(i) for i in self.indices) + ")"


# constraint compilation ------------------------------------------------------

_TERM = re.compile(r"h\(([ijklm])\)|([ijklm])")
_OP = re.compile(r"<=|<")


def _compile_term(text: str) -> Callable[[Sequence[int], HessenbergFunction], int]:
    m = _TERM.fullmatch(text)
    if m is None:
        raise ValueError(f"bad term {text!r}")
    if m.group(1):
        slot = SLOTS.index(m.group(1))
        return lambda idx, h: h.values[idx[slot] - 1]
    slot = SLOTS.index(m.group(2))
    return lambda idx, h: idx[slot]


def _compile_chain(chain: str):
    terms = _OP.split(chain)
    ops = _OP.findall(chain)
    fns = [_compile_term(t.strip()) for t in terms]
    checks = []
    for a, op, b in zip(fns, ops, fns[1:]):
        if op == "<=":
            checks.append(lambda idx, h, a=a, b=b: a(idx, h) <= b(idx, h))
        else:
            checks.append(lambda idx, h, a=a, b=b: a(idx, h) < b(idx, h))
    return checks


@functools.lru_cache(maxsize=None)
def _checks(name: str):
    p = PATTERNS[name]
    return tuple(c for chain in p.constraints for c in _compile_chain(chain))


@functools.lru_cache(maxsize=4096)
def admissible_positions(name: str, h: HessenbergFunction) -> tuple[tuple[int, ...], ...]:
    """Increasing index tuples meeting the h-constraints of ``name`` (lexicographic)."""
    p = PATTERNS[name]
    checks = _checks(name)
    return tuple(
        idx
        for idx in itertools.combinations(range(1, h.n + 1), p.size)
        if all(c(idx, h) for c in checks)
    )


@functools.lru_cache(maxsize=None)
def _value_order(name: str) -> tuple[int, ...]:
    # slot positions listed from smallest value to largest
    order = PATTERNS[name].order
    return tuple(sorted(range(len(order)), key=lambda s: order[s]))


def find_pattern_word(word: Sequence[int], h: HessenbergFunction, name: str) -> tuple[int, ...] | None:
    try:
        seq = _value_order(name)
    except KeyError:
        raise ValueError(f"unknown associated pattern {name!r}") from None
    for idx in admissible_positions(name, h):
        vals = [word[idx[s] - 1] for s in seq]
        if all(x < y for x, y in zip(vals, vals[1:])):
            return idx
    return None


def find_pattern(w: Permutation, h: HessenbergFunction, p: str) -> PatternWitness | None:
    """Lexicographically smallest witness of associated pattern ``p`` in w, if any."""
    if p not in PATTERNS:
        raise ValueError(f"unknown associated pattern {p!r}; expected one of {list(PATTERNS)}")
    _check_sizes(w, h)
    idx = find_pattern_word(w.word, h, p)
    return None if idx is None else PatternWitness(p, idx)


def first_contained(word: Sequence[int], h: HessenbergFunction, names: Sequence[str]) -> PatternWitness | None:
    for name in names:
        idx = find_pattern_word(word, h, name)
        if idx is not None:
            return PatternWitness(name, idx)
    return None


def avoids_all(w: Permutation, h: HessenbergFunction, set_id: str = "general10") -> tuple[bool, PatternWitness | None]:
    """(w avoids every pattern of the set, first witness found in set order)."""
    try:
        names = PATTERN_SETS[set_id]
    except KeyError:
        raise ValueError(f"unknown pattern set {set_id!r}; expected generator7 or general10") from None
    _check_sizes(w, h)
    wit = first_contained(w.word, h, names)
    return wit is None, wit


def pattern_table(w: Permutation, h: HessenbergFunction) -> list[tuple[str, PatternWitness | None]]:
    _check_sizes(w, h)
    return [(name, find_pattern(w, h, name)) for name in PATTERNS]
