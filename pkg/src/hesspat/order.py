"""Bruhat and h-Bruhat order: comparisons, intervals, saturated chains."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _tables
from .hessenberg import HessenbergFunction
from .perm_core import Permutation, inversions, swap_positions

# n at or below which the precomputed rank tables are used
TABLE_MAX_N = 7


def _same_size(u: Permutation, v: Permutation) -> None:
    if u.n != v.n:
        raise ValueError(f"size mismatch: {u} vs {v}")


def _prefix_ok(a: Sequence[int], b: Sequence[int], k: int) -> bool:
    return all(x <= y for x, y in zip(sorted(a[:k]), sorted(b[:k])))


def bruhat_leq_words(u: Sequence[int], v: Sequence[int]) -> bool:
    n = len(u)
    for k in range(1, n):
        if v[k - 1] > v[k]:
            continue  # descents of v need not be checked
        if not _prefix_ok(u, v, k):
            return False
    return True


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """u <= v in Bruhat order, by the tableau criterion at the non-descents of v."""
    _same_size(u, v)
    return bruhat_leq_words(u.word, v.word)


def bruhat_leq_all_prefixes(u: Permutation, v: Permutation) -> bool:
    """Same relation, checking u[k] <= v[k] (sorted) for every k."""
    _same_size(u, v)
    return all(_prefix_ok(u.word, v.word, k) for k in range(1, u.n + 1))


def bruhat_compare_positions(u: Permutation, v: Permutation, positions: Iterable[int]) -> bool:
    """Bruhat comparison for u, v that agree off ``positions``.

    Compares the sorted value sets {u(i_1..i_j)} and {v(i_1..i_j)} for every
    prefix of the sorted position list.
    """
    _same_size(u, v)
    pos = sorted(set(positions))
    if any(not 1 <= p <= u.n for p in pos):
        raise ValueError(f"positions {pos} out of range for n={u.n}")
    off = set(range(1, u.n + 1)) - set(pos)
    if any(u[p] != v[p] for p in off):
        raise ValueError(f"{u} and {v} differ outside positions {pos}")
    uv = [u[p] for p in pos]
    vv = [v[p] for p in pos]
    return all(_prefix_ok(uv, vv, k) for k in range(1, len(pos) + 1))


def bruhat_closure(n: int) -> dict[tuple[int, ...], set[tuple[int, ...]]]:
    """u -> {v : u <= v}, from the definition: closure of length-raising swaps.

    Independent of the tableau criterion; meant as an oracle for small n.
    """
    from .perm_core import all_words

    words = sorted(all_words(n), key=inversions, reverse=True)
    up: dict[tuple[int, ...], set[tuple[int, ...]]] = {}
    for u in words:
        acc = {u}
        for i in range(n):
            for j in range(i + 1, n):
                if u[i] < u[j]:
                    acc |= up[swap_positions(u, i + 1, j + 1)]
        up[u] = acc
    return up


def _h_steps(word: tuple[int, ...], h: HessenbergFunction, upward: bool = True):
    for i, j in h.pairs:
        if (word[i - 1] < word[j - 1]) == upward:
            yield (i, j), swap_positions(word, i, j)


def h_bruhat_leq(u: Permutation, v: Permutation, h: HessenbergFunction) -> bool:
    """u <=_h v: v reachable from u by length-raising swaps (i, j) with j <= h(i)."""
    _same_size(u, v)
    if h.n != u.n:
        raise ValueError(f"size mismatch: |h| = {h.n}, |u| = {u.n}")
    if u.n <= TABLE_MAX_N - 1:
        t = _tables.hess_tables(h)
        g = t.g
        return bool((t.up[g.index[u.word]] >> g.index[v.word]) & 1)
    return _h_bruhat_leq_bfs(u.word, v.word, h)


def _h_bruhat_leq_bfs(u: tuple[int, ...], v: tuple[int, ...], h: HessenbergFunction) -> bool:
    target_len = inversions(v)
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            return True
        for _, y in _h_steps(x, h):
            if y not in seen and inversions(y) <= target_len and bruhat_leq_words(y, v):
                seen.add(y)
                queue.append(y)
    return False


@dataclass(frozen=True)
class BruhatInterval:
    """Members of [lo, hi] (or [lo, hi]_h) as sorted Lehmer ranks."""

    lo: Permutation
    hi: Permutation
    ranks: tuple[int, ...]

    @property
    def members(self) -> list[Permutation]:
        return [Permutation.unrank(r, self.lo.n) for r in self.ranks]

    def __len__(self) -> int:
        return len(self.ranks)

    def __contains__(self, w: Permutation) -> bool:
        from bisect import bisect_left

        r = w.rank()
        k = bisect_left(self.ranks, r)
        return k < len(self.ranks) and self.ranks[k] == r

    def __iter__(self):
        return iter(self.members)


def bruhat_interval(lo: Permutation, hi: Permutation) -> BruhatInterval:
    _same_size(lo, hi)
    n = lo.n
    if n <= TABLE_MAX_N:
        g = _tables.group(n)
        bits = g.bruhat_up[g.index[lo.word]] & g.bruhat_down[g.index[hi.word]]
        return BruhatInterval(lo, hi, tuple(_tables.bits_to_ranks(bits)))
    from .perm_core import all_words, rank

    ranks = tuple(
        rank(w) for w in all_words(n) if bruhat_leq_words(lo.word, w) and bruhat_leq_words(w, hi.word)
    )
    return BruhatInterval(lo, hi, ranks)


def h_interval(lo: Permutation, hi: Permutation, h: HessenbergFunction) -> BruhatInterval:
    """{w : lo <=_h w <=_h hi}: forward-reachable from lo meet backward-reachable from hi."""
    _same_size(lo, hi)
    t = _tables.hess_tables(h)
    g = t.g
    bits = t.up[g.index[lo.word]] & t.down[g.index[hi.word]]
    return BruhatInterval(lo, hi, tuple(_tables.bits_to_ranks(bits)))


def saturated_chain(u: Permutation, v: Permutation, h: HessenbergFunction | None = None) -> list[Permutation] | None:
    """A chain u = v_0 < v_1 < ... < v_k = v whose steps are single (h-admissible)
    swaps raising length by exactly one, found by depth-first search; None if none exists.
    """
    _same_size(u, v)
    n = u.n
    pairs = h.pairs if h is not None else tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
    target = v.word
    target_len = inversions(target)
    dead: set[tuple[int, ...]] = set()

    def dfs(x: tuple[int, ...], lx: int, path: list[tuple[int, ...]]) -> bool:
        if x == target:
            return True
        if lx >= target_len:
            return False
        for i, j in pairs:
            if x[i - 1] >= x[j - 1]:
                continue
            y = swap_positions(x, i, j)
            if y in dead or inversions(y) != lx + 1 or not bruhat_leq_words(y, target):
                continue
            path.append(y)
            if dfs(y, lx + 1, path):
                return True
            path.pop()
            dead.add(y)
        return False

    path = [u.word]
    if dfs(u.word, inversions(u.word), path):
        return [Permutation(w) for w in path]
    return None


def check_chain_property(u: Permutation, v: Permutation, h: HessenbergFunction | None = None) -> bool:
    """True iff a saturated (h-)chain joins u to v.  Requires u <= v (resp. u <=_h v)."""
    comparable = h_bruhat_leq(u, v, h) if h is not None else bruhat_leq(u, v)
    if not comparable:
        raise ValueError(f"{u} and {v} are not comparable" + (f" in the h-Bruhat order for h={h}" if h else ""))
    return saturated_chain(u, v, h) is not None
