"""Per-n and per-(n, h) lookup tables shared by the bulk routines.

Permutations are addressed by Lehmer rank.  Sets of permutations are Python
ints used as bitsets (bit r <-> rank r) or numpy bool masks.  Everything here
is built once and then only read, so it is safe to share between threads and
is rebuilt independently inside worker processes.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .hessenberg import HessenbergFunction


def _mask_to_bits(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


def bits_to_ranks(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


@dataclass
class SymmetricGroupTables:
    n: int
    words: list[tuple[int, ...]]
    index: dict[tuple[int, ...], int]
    word_array: np.ndarray  # (N, n), 1-based values
    lengths: np.ndarray  # (N,)
    all_pairs: list[tuple[int, int]]
    pair_id: dict[tuple[int, int], int]
    swap: np.ndarray  # (N, P): rank of w(i,j)
    ascent: np.ndarray  # (N, P): w(i) < w(j)
    _code_to_rank: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.words)

    @property
    def identity(self) -> int:
        return 0

    @property
    def longest(self) -> int:
        return len(self.words) - 1

    def ranks_of(self, arr: np.ndarray) -> np.ndarray:
        """Ranks of the rows of an (M, n) array of 1-based words."""
        code = ((arr - 1) * (self.n ** np.arange(self.n))).sum(axis=1)
        return self._code_to_rank[code]

    def left_translate(self, sigma: tuple[int, ...]) -> np.ndarray:
        """perm[r] = rank(sigma o words[r])."""
        sig = np.asarray((0,) + tuple(sigma))
        return self.ranks_of(sig[self.word_array])

    # Bruhat order (tableau criterion over all prefixes, vectorised) -----
    @functools.cached_property
    def _prefix_signature(self) -> np.ndarray:
        cols = []
        for k in range(1, self.n + 1):
            cols.append(np.sort(self.word_array[:, :k], axis=1))
        return np.concatenate(cols, axis=1)

    @functools.cached_property
    def bruhat_matrix(self) -> np.ndarray:
        """leq[u, v] = (u <= v in Bruhat order)."""
        sig = self._prefix_signature
        N = self.size
        out = np.empty((N, N), dtype=bool)
        step = max(1, 2_000_000 // (N * sig.shape[1] + 1))
        for lo in range(0, N, step):
            out[lo : lo + step] = (sig[lo : lo + step, None, :] <= sig[None, :, :]).all(axis=2)
        return out

    @functools.cached_property
    def bruhat_up(self) -> list[int]:
        """Bitset of [u, w0] for every rank u."""
        return [_mask_to_bits(row) for row in self.bruhat_matrix]

    @functools.cached_property
    def bruhat_down(self) -> list[int]:
        return [_mask_to_bits(col) for col in self.bruhat_matrix.T]


@functools.lru_cache(maxsize=None)
def group(n: int) -> SymmetricGroupTables:
    words = list(itertools.permutations(range(1, n + 1)))
    index = {w: r for r, w in enumerate(words)}
    arr = np.array(words, dtype=np.int64).reshape(len(words), n)
    lengths = np.zeros(len(words), dtype=np.int64)
    for a in range(n):
        for b in range(a + 1, n):
            lengths += arr[:, a] > arr[:, b]
    all_pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    pair_id = {p: k for k, p in enumerate(all_pairs)}
    code_to_rank = np.full(n**n, -1, dtype=np.int64)
    codes = ((arr - 1) * (n ** np.arange(n))).sum(axis=1)
    code_to_rank[codes] = np.arange(len(words))
    P = len(all_pairs)
    swap = np.zeros((len(words), P), dtype=np.int64)
    ascent = np.zeros((len(words), P), dtype=bool)
    for k, (i, j) in enumerate(all_pairs):
        sw = arr.copy()
        sw[:, [i - 1, j - 1]] = sw[:, [j - 1, i - 1]]
        swap[:, k] = code_to_rank[((sw - 1) * (n ** np.arange(n))).sum(axis=1)]
        ascent[:, k] = arr[:, i - 1] < arr[:, j - 1]
    return SymmetricGroupTables(
        n=n,
        words=words,
        index=index,
        word_array=arr,
        lengths=lengths,
        all_pairs=all_pairs,
        pair_id=pair_id,
        swap=swap,
        ascent=ascent,
        _code_to_rank=code_to_rank,
    )


@dataclass
class HessenbergTables:
    """Gamma_h data for one h: admissible pair columns and h-Bruhat reachability."""

    g: SymmetricGroupTables
    h: HessenbergFunction
    cols: np.ndarray  # column ids into g.swap for admissible pairs
    pairs: tuple[tuple[int, int], ...]

    @functools.cached_property
    def neighbors(self) -> np.ndarray:
        """(N, |pairs|): rank of u(i,j) for each admissible (i, j)."""
        return self.g.swap[:, self.cols]

    @functools.cached_property
    def _order_by_length(self) -> np.ndarray:
        return np.argsort(self.g.lengths, kind="stable")

    def _reach(self, upward: bool, saturated: bool) -> list[int]:
        g = self.g
        nbr = self.neighbors.tolist()
        asc = g.ascent[:, self.cols].tolist()
        lengths = g.lengths.tolist()
        order = self._order_by_length.tolist()
        if upward:
            order = order[::-1]
        reach = [0] * g.size
        for u in order:
            acc = 1 << u
            lu = lengths[u]
            for v, a in zip(nbr[u], asc[u]):
                if a != upward:
                    continue
                if saturated and abs(lengths[v] - lu) != 1:
                    continue
                acc |= reach[v]
            reach[u] = acc
        return reach

    @functools.cached_property
    def up(self) -> list[int]:
        """up[u] = {v : u <=_h v} as a bitset."""
        return self._reach(upward=True, saturated=False)

    @functools.cached_property
    def down(self) -> list[int]:
        return self._reach(upward=False, saturated=False)

    @functools.cached_property
    def saturated_up(self) -> list[int]:
        """Targets reachable from u by h-steps each raising length by exactly one."""
        return self._reach(upward=True, saturated=True)


@functools.lru_cache(maxsize=512)
def hess_tables(h: HessenbergFunction) -> HessenbergTables:
    g = group(h.n)
    cols = np.array([g.pair_id[p] for p in h.pairs], dtype=np.int64)
    return HessenbergTables(g=g, h=h, cols=cols, pairs=h.pairs)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)
