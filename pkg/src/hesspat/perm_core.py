"""Permutations in one-line notation.

Positions and values are 1-based everywhere in the public API, so that
``Permutation.parse("2134")[1] == 2``.  Storage is a plain tuple of ints.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, order=True)
class Transposition:
    """The transposition swapping positions ``i < j`` (1-based)."""

    i: int
    j: int

    def __post_init__(self):
        if not (1 <= self.i < self.j):
            raise ValueError(f"transposition needs 1 <= i < j, got ({self.i},{self.j})")

    def __str__(self) -> str:
        return f"({self.i},{self.j})"

    def __iter__(self):
        return iter((self.i, self.j))


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] stored as its one-line word."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of [n]: {self.word!r}")
        object.__setattr__(self, "word", word)

    # construction -------------------------------------------------------
    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse ``"2134"`` or ``"2,1,3,4"`` (comma form required for n >= 10)."""
        text = text.strip()
        if "," in text:
            parts = [p for p in text.split(",") if p.strip()]
            return cls(tuple(int(p) for p in parts))
        if not text.isdigit():
            raise ValueError(f"malformed permutation string: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """w0 = n (n-1) ... 1."""
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def unrank(cls, rank: int, n: int) -> "Permutation":
        return cls(unrank(rank, n))

    # basic protocol -----------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __getitem__(self, i: int) -> int:
        """w(i) for 1 <= i <= n."""
        if not 1 <= i <= len(self.word):
            raise IndexError(f"position {i} out of range for n={len(self.word)}")
        return self.word[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __str__(self) -> str:
        return format_word(self.word)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    def __lt__(self, other: "Permutation") -> bool:
        # rank order == lexicographic order of words
        return self.word < other.word

    # group structure ----------------------------------------------------
    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition ``(self * other)(x) = self(other(x))``."""
        return Permutation(compose(self.word, other.word))

    def inverse(self) -> "Permutation":
        return Permutation(inverse_word(self.word))

    def swap(self, i: int, j: int) -> "Permutation":
        """Right multiplication by the transposition (i, j)."""
        return apply_transposition(self, Transposition(min(i, j), max(i, j)))

    def rank(self) -> int:
        return rank(self.word)

    def length(self) -> int:
        return length(self)


# ---------------------------------------------------------------------------
# tuple-level helpers (used by the hot loops; inputs are 1-based words)


def format_word(word: Sequence[int]) -> str:
    if len(word) <= 9:
        return "".join(str(x) for x in word)
    return ",".join(str(x) for x in word)


def compose(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(a[x - 1] for x in b)


def inverse_word(word: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(word)
    for pos, val in enumerate(word, 1):
        inv[val - 1] = pos
    return tuple(inv)


def swap_positions(word: Sequence[int], i: int, j: int) -> tuple[int, ...]:
    w = list(word)
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


def inversions(word: Sequence[int]) -> int:
    n = len(word)
    return sum(1 for a in range(n) for b in range(a + 1, n) if word[a] > word[b])


def lehmer_code(word: Sequence[int]) -> tuple[int, ...]:
    """c_i = #{j > i : w(j) < w(i)}."""
    n = len(word)
    return tuple(sum(1 for b in range(a + 1, n) if word[b] < word[a]) for a in range(n))


def rank(word: Sequence[int]) -> int:
    """Lehmer rank; agrees with the lexicographic position of ``word`` in S_n."""
    n = len(word)
    return sum(c * math.factorial(n - 1 - i) for i, c in enumerate(lehmer_code(word)))


def unrank(r: int, n: int) -> tuple[int, ...]:
    if not 0 <= r < math.factorial(n):
        raise ValueError(f"rank {r} out of range for n={n}")
    pool = list(range(1, n + 1))
    out = []
    for i in range(n - 1, -1, -1):
        f = math.factorial(i)
        q, r = divmod(r, f)
        out.append(pool.pop(q))
    return tuple(out)


def all_words(n: int) -> Iterator[tuple[int, ...]]:
    """S_n in Lehmer rank order."""
    return itertools.permutations(range(1, n + 1))


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(w) for w in all_words(n)]


# ---------------------------------------------------------------------------
# public operations


def _check_transposition(n: int, t: Transposition) -> None:
    if not (1 <= t.i < t.j <= n):
        raise ValueError(f"transposition {t} out of range for n={n}")


def apply_transposition(w: Permutation, t: Transposition) -> Permutation:
    """w(i,j): the word of w with positions i and j exchanged."""
    _check_transposition(w.n, t)
    return Permutation(swap_positions(w.word, t.i, t.j))


def inverse(w: Permutation) -> Permutation:
    return w.inverse()


def length(w: Permutation) -> int:
    """Number of inversions."""
    return inversions(w.word)


def prefix_set(w: Permutation, k: int) -> tuple[int, ...]:
    """w[k] = {w(1), ..., w(k)} in increasing order."""
    if not 1 <= k <= w.n:
        raise ValueError(f"prefix length {k} out of range for n={w.n}")
    return tuple(sorted(w.word[:k]))


def descent_set(w: Permutation) -> frozenset[int]:
    return frozenset(i for i in range(1, w.n) if w.word[i - 1] > w.word[i])


def same_relative_order(values: Sequence[int], pattern: Sequence[int]) -> bool:
    k = len(pattern)
    return all(
        (values[a] < values[b]) == (pattern[a] < pattern[b])
        for a in range(k)
        for b in range(a + 1, k)
    )


def contains_classical_pattern(w: Permutation, p: Permutation | Sequence[int]) -> tuple[int, ...] | None:
    """Lexicographically smallest index tuple (1-based) realizing ``p`` in ``w``."""
    pat = p.word if isinstance(p, Permutation) else tuple(p)
    if len(pat) > w.n:
        return None
    for idx in itertools.combinations(range(w.n), len(pat)):
        if same_relative_order([w.word[i] for i in idx], pat):
            return tuple(i + 1 for i in idx)
    return None


def avoids_classical(w: Permutation, patterns: Iterable[Sequence[int]]) -> bool:
    return all(contains_classical_pattern(w, p) is None for p in patterns)
