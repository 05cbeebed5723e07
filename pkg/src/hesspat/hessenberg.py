"""Hessenberg functions, h-restricted statistics, generators."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .perm_core import Permutation, all_words, inverse_word


@dataclass(frozen=True)
class HessenbergFunction:
    """Nondecreasing h: [n] -> [n] with h(i) >= i, stored as (h(1), ..., h(n))."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(x) for x in self.values)
        n = len(vals)
        if n == 0:
            raise ValueError("Hessenberg function on an empty set")
        for i, v in enumerate(vals, 1):
            if not i <= v <= n:
                raise ValueError(f"h({i}) = {v} violates i <= h(i) <= n in {vals}")
            if i > 1 and v < vals[i - 2]:
                raise ValueError(f"h is not nondecreasing at {i}: {vals}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def parse(cls, text: str) -> "HessenbergFunction":
        """Accepts ``"3,3,4,4"`` or ``"(3,3,4,4)"``; single digits may omit commas."""
        t = text.strip().strip("()").strip()
        if "," in t:
            return cls(tuple(int(p) for p in t.split(",") if p.strip()))
        if t.isdigit():
            return cls(tuple(int(c) for c in t))
        raise ValueError(f"malformed Hessenberg function: {text!r}")

    @classmethod
    def full(cls, n: int) -> "HessenbergFunction":
        """(n, ..., n); Gamma_h is the Bruhat graph."""
        return cls((n,) * n)

    @classmethod
    def minimal(cls, n: int) -> "HessenbergFunction":
        """(1, 2, ..., n)."""
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def permutohedral(cls, n: int) -> "HessenbergFunction":
        """(2, 3, ..., n, n)."""
        return cls(tuple(min(i + 1, n) for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"

    def __repr__(self) -> str:
        return f"HessenbergFunction({str(self)!r})"

    @functools.cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Admissible position pairs (i, j), i < j <= h(i), lexicographic."""
        return tuple((i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.values[i - 1] + 1))

    def restrict(self) -> "HessenbergFunction":
        """h' on [n-1]: delete vertex n from the incomparability graph."""
        if self.n < 2:
            raise ValueError("cannot restrict a Hessenberg function on [1]")
        return HessenbergFunction(tuple(min(v, self.n - 1) for v in self.values[:-1]))


def _check_sizes(w: Permutation, h: HessenbergFunction) -> None:
    if w.n != h.n:
        raise ValueError(f"size mismatch: |w| = {w.n}, |h| = {h.n}")


def iter_hessenberg(n: int) -> Iterator[HessenbergFunction]:
    if n < 1:
        raise ValueError("n must be >= 1")

    def rec(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        i = len(prefix) + 1
        if i > n:
            yield tuple(prefix)
            return
        lo = max(prefix[-1] if prefix else 1, i)
        for v in range(lo, n + 1):
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    for vals in rec([]):
        yield HessenbergFunction(vals)


@functools.lru_cache(maxsize=None)
def enumerate_hessenberg(n: int) -> tuple[HessenbergFunction, ...]:
    """All Hessenberg functions on [n] in lexicographic order (Catalan(n) many)."""
    return tuple(iter_hessenberg(n))


def dimension_dh(h: HessenbergFunction) -> int:
    return sum(v - i for i, v in enumerate(h.values, 1))


def ell_h_word(word: Sequence[int], h: HessenbergFunction) -> int:
    return sum(1 for i, j in h.pairs if word[i - 1] > word[j - 1])


def ell_h(w: Permutation, h: HessenbergFunction) -> int:
    """Inversions (i, j) of w with j <= h(i)."""
    _check_sizes(w, h)
    return ell_h_word(w.word, h)


def is_generator_word(word: Sequence[int], h: HessenbergFunction) -> bool:
    n = len(word)
    inv = inverse_word(word)
    return all(inv[word[i]] <= h.values[i] for i in range(n) if word[i] <= n - 1)


def is_generator(w: Permutation, h: HessenbergFunction) -> bool:
    """w^{-1}(w(i)+1) <= h(i) whenever w(i) <= n-1."""
    _check_sizes(w, h)
    return is_generator_word(w.word, h)


@functools.lru_cache(maxsize=None)
def generator_words(h: HessenbergFunction) -> tuple[tuple[int, ...], ...]:
    """Generators for h in rank order."""
    return tuple(w for w in all_words(h.n) if is_generator_word(w, h))


def generators(h: HessenbergFunction) -> list[Permutation]:
    return [Permutation(w) for w in generator_words(h)]


def order_key(word: Sequence[int], h: HessenbergFunction) -> tuple[bool, ...]:
    """Relative order of w on every admissible pair; w and its generator share it."""
    return tuple(word[i - 1] < word[j - 1] for i, j in h.pairs)


class GeneratorUniquenessError(AssertionError):
    """Zero or several generators match the relative-order condition."""


def corresponding_generator(w: Permutation, h: HessenbergFunction) -> Permutation:
    """The generator agreeing with w in relative order on every admissible pair.

    Reference implementation: filter all generators of h.  Uniqueness is
    asserted; a violation raises :class:`GeneratorUniquenessError`.
    """
    _check_sizes(w, h)
    key = order_key(w.word, h)
    hits = [g for g in generator_words(h) if order_key(g, h) == key]
    if len(hits) != 1:
        raise GeneratorUniquenessError(
            f"{len(hits)} generators match {w} for h={h}: {[''.join(map(str, g)) for g in hits]}"
        )
    return Permutation(hits[0])


@functools.lru_cache(maxsize=None)
def generator_index(h: HessenbergFunction) -> dict[tuple[bool, ...], tuple[int, ...]]:
    """order_key -> generator, for bulk lookups.  Raises if two generators collide."""
    index: dict[tuple[bool, ...], tuple[int, ...]] = {}
    for g in generator_words(h):
        key = order_key(g, h)
        if key in index:
            raise GeneratorUniquenessError(f"generators {index[key]} and {g} share an order key for h={h}")
        index[key] = g
    return index


def corresponding_generator_word(word: Sequence[int], h: HessenbergFunction) -> tuple[int, ...]:
    try:
        return generator_index(h)[order_key(word, h)]
    except KeyError:
        raise GeneratorUniquenessError(f"no generator matches {tuple(word)} for h={h}") from None


@dataclass(frozen=True)
class IncomparabilityGraph:
    n: int
    edges: frozenset[tuple[int, int]]

    def to_dot(self, name: str = "incomparability") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {i};" for i in range(1, self.n + 1)]
        lines += [f"  {i} -- {j};" for i, j in sorted(self.edges)]
        lines.append("}")
        return "\n".join(lines) + "\n"


def incomparability_graph(h: HessenbergFunction) -> IncomparabilityGraph:
    return IncomparabilityGraph(h.n, frozenset(h.pairs))
