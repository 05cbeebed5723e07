"""Y(w), well-organized permutations and the w-bar chain.

For w in S_n let Y(w) = {w(i) : i >= w^{-1}(1), w(i) <= w(n)} = {y_0 < ... < y_r}.
w is well-organized when these values sit at increasing positions.  Then
w-bar_0 = w and w-bar_m = (1, y_m) w-bar_{m-1} (swap the values 1 and y_m),
ending at w-bar = w-bar_r with w-bar(n) = 1.

Checks that carry hypotheses return ``None`` when the hypotheses fail, so a
sweep can count them as skips; ``False`` always means a violated statement.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from . import _tables
from .gkm import edge_pairs, phi_pairs
from .hessenberg import HessenbergFunction, _check_sizes, is_generator_word
from .patterns import GENERATOR7, first_contained, find_pattern_word
from .perm_core import Permutation, format_word, inverse_word


def y_values(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    start = word.index(1)
    last = word[n - 1]
    return tuple(sorted(x for x in word[start:] if x <= last))


def is_well_organized_word(word: tuple[int, ...]) -> bool:
    inv = inverse_word(word)
    pos = [inv[y - 1] for y in y_values(word)]
    return all(a < b for a, b in zip(pos, pos[1:])) and pos[-1] == len(word)


def kind_of(word: tuple[int, ...]) -> str:
    """first / second / both / neither (neither also for non-well-organized w)."""
    if not is_well_organized_word(word):
        return "neither"
    ys = y_values(word)
    r = len(ys) - 1
    n = len(word)
    first = all(y == i + 1 for i, y in enumerate(ys))
    second = all(word[n - i - 1] == ys[r - i] for i in range(r + 1))
    return {(True, True): "both", (True, False): "first", (False, True): "second"}.get((first, second), "neither")


def wbar_chain_words(word: tuple[int, ...]) -> list[tuple[int, ...]]:
    ys = y_values(word)
    chain = [tuple(word)]
    for y in ys[1:]:
        cur = chain[-1]
        chain.append(tuple(y if x == 1 else 1 if x == y else x for x in cur))
    return chain


@dataclass(frozen=True)
class WellOrgProfile:
    word: tuple[int, ...]
    y_values: tuple[int, ...]
    is_well_organized: bool
    kind: str
    wbar_chain: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.y_values) - 1

    @property
    def wbar(self) -> Permutation | None:
        return Permutation(self.wbar_chain[-1]) if self.wbar_chain else None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["word"] = format_word(self.word)
        d["y_values"] = list(self.y_values)
        d["r"] = self.r
        d["wbar_chain"] = [format_word(c) for c in self.wbar_chain]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def profile(w: Permutation, h: HessenbergFunction | None = None) -> WellOrgProfile:
    if h is not None:
        _check_sizes(w, h)
    word = w.word
    wo = is_well_organized_word(word)
    return WellOrgProfile(
        word=word,
        y_values=y_values(word),
        is_well_organized=wo,
        kind=kind_of(word),
        wbar_chain=tuple(wbar_chain_words(word)) if wo else (),
    )


def reduce_to_smaller(wbar: Permutation, h: HessenbergFunction) -> tuple[Permutation, HessenbergFunction]:
    """(w', h') on [n-1]: drop the trailing 1 of w-bar and vertex n of h."""
    if wbar[wbar.n] != 1:
        raise ValueError(f"{wbar} does not end in 1")
    return Permutation(tuple(x - 1 for x in wbar.word[:-1])), h.restrict()


# ---------------------------------------------------------------------------
# named verifiers


def _require_generator(w: Permutation, h: HessenbergFunction) -> None:
    _check_sizes(w, h)
    if not is_generator_word(w.word, h):
        raise ValueError(f"{w} is not a generator for h={h}")


def check_lemma_y(w: Permutation, h: HessenbergFunction) -> bool:
    """w^{-1}(y_i) <= h(w^{-1}(y_{i-1})) for 1 <= i <= r, for a generator w."""
    _require_generator(w, h)
    inv = inverse_word(w.word)
    ys = y_values(w.word)
    return all(inv[ys[i] - 1] <= h(inv[ys[i - 1] - 1]) for i in range(1, len(ys)))


def prop_wbar_failure(word: tuple[int, ...], h: HessenbergFunction) -> str | None:
    n = len(word)
    g = _tables.group(n)
    chain = wbar_chain_words(word)
    wbar = chain[-1]
    if not is_generator_word(wbar, h):
        return f"(1) w-bar={format_word(wbar)} is not a generator"
    up_w = g.bruhat_up[g.index[tuple(word)]]
    ending_in_1 = sum(1 << r for r in _tables.bits_to_ranks(up_w) if g.words[r][-1] == 1)
    if g.bruhat_up[g.index[wbar]] != ending_in_1:
        return "(2) [w-bar, w0] != {u in [w, w0] : u(n) = 1}"
    inv = inverse_word(word)
    ys = y_values(word)
    lhs = {(i, j) for i, j in edge_pairs(wbar, tuple(word), h) if j == n}
    rhs = {(inv[y - 1], n) for y in ys[:-1] if h(inv[y - 1]) == n}
    if lhs != rhs:
        return f"(3) edges (i,n) at w-bar {sorted(lhs)} != {sorted(rhs)}"
    return None


def check_prop_wbar(w: Permutation, h: HessenbergFunction) -> bool:
    """All three clauses for a well-organized generator: w-bar is a generator,
    [w-bar, w0] is the part of [w, w0] ending in 1, and the edges (i, n) at
    w-bar come exactly from the y_s (s < r) with h(w^{-1}(y_s)) = n.
    """
    _require_generator(w, h)
    if not is_well_organized_word(w.word):
        raise ValueError(f"{w} is not well-organized")
    return prop_wbar_failure(w.word, h) is None


def prop_organized_status(word: tuple[int, ...], h: HessenbergFunction, m: int) -> str | None:
    """None on success, "skip" if the hypothesis fails, else a failure message."""
    chain = wbar_chain_words(word)
    prev, cur = chain[m - 1], chain[m]
    diff = [p for p in range(1, len(word) + 1) if prev[p - 1] != cur[p - 1]]
    a, b = diff
    one_pos = word.index(1) + 1
    E_cur = set(edge_pairs(cur, word, h))
    if any(h(p) < b for p, q in E_cur if q == a and p < one_pos):
        return "skip"
    E_prev = set(edge_pairs(prev, word, h))
    mapping = phi_pairs(prev, a, b, E_prev)
    image = set(mapping.values())
    if len(image) != len(mapping) or image != E_cur:
        return f"phi(m={m}) is not a bijection onto E(w-bar_m)"
    for (i, j), target in mapping.items():
        expected = (i, a) if (j == b and i < one_pos) else (i, j)
        if target != expected:
            return f"phi(m={m}) sends {(i, j)} to {target}, expected {expected}"
    if kind_of(word) in ("first", "both") and E_prev != E_cur:
        return f"first kind but E(w-bar_{m - 1}) != E(w-bar_{m})"
    return None


def check_prop_organized(w: Permutation, h: HessenbergFunction, m: int) -> bool | None:
    """phi between w-bar_{m-1} and w-bar_m is a bijection, fixing all but (p, b) -> (p, a)
    for p < w^{-1}(1); identity for the first kind.  None when the hypothesis
    h(p) >= b for every (p, a) in E(w-bar_m) with p < w^{-1}(1) fails.
    """
    _require_generator(w, h)
    if not is_well_organized_word(w.word):
        raise ValueError(f"{w} is not well-organized")
    r = len(y_values(w.word)) - 1
    if not 1 <= m <= r:
        raise ValueError(f"m={m} outside 1..{r}")
    status = prop_organized_status(w.word, h, m)
    if status == "skip":
        return None
    return status is None


def check_lemma_1324(w: Permutation, h: HessenbergFunction) -> bool | None:
    """A generator avoiding 1324h is well-organized."""
    if not is_generator_word(w.word, h) or find_pattern_word(w.word, h, "1324h") is not None:
        return None
    return is_well_organized_word(w.word)


def lemma_kind_status(word: tuple[int, ...], h: HessenbergFunction) -> str | None:
    """None ok, "skip" when no clause applies, else a failure message."""
    if not is_generator_word(word, h) or not is_well_organized_word(word):
        return "skip"
    n = len(word)
    kind = kind_of(word)
    one_pos = word.index(1) + 1
    contains = lambda p: find_pattern_word(word, h, p) is not None  # noqa: E731
    applied = False
    if h(one_pos) < n and not contains("2134h"):
        applied = True
        if kind not in ("first", "both"):
            return f"(1) h(w^-1(1)) < n, avoids 2134h, but kind={kind}"
        if not contains("1243h") and not contains("1423h"):
            ys = set(y_values(word))
            bad = [i for i in range(1, n + 1) if h(i) == n and word[i - 1] not in ys]
            if bad:
                return f"(1) positions {bad} with h(i) = n carry values outside Y(w)"
    if h(one_pos) == n and not contains("2143h") and not contains("2134h"):
        applied = True
        if kind == "neither":
            return "(2) h(w^-1(1)) = n, avoids 2143h and 2134h, but neither kind"
    return None if applied else "skip"


def check_lemma_kind(w: Permutation, h: HessenbergFunction) -> bool | None:
    s = lemma_kind_status(w.word, h)
    return None if s == "skip" else s is None


def prop_size_e_status(word: tuple[int, ...], h: HessenbergFunction) -> str | None:
    if not is_generator_word(word, h):
        return "skip"
    contains = lambda p: find_pattern_word(word, h, p) is not None  # noqa: E731
    if contains("2143h") or contains("1324h") or contains("2134h"):
        return "skip"
    if not is_well_organized_word(word):
        return "w avoids 1324h but is not well-organized"
    n = len(word)
    applied = False
    if not contains("2314h"):
        applied = True
        wbar = wbar_chain_words(word)[-1]
        a, b = len(edge_pairs(word, word, h)), len(edge_pairs(wbar, word, h))
        if a != b:
            return f"(1) |E(w)| = {a} != |E(w-bar)| = {b}"
    if not contains("1243h") and not contains("1423h"):
        applied = True
        inv = inverse_word(word)
        k = sum(1 for y in y_values(word) if h(inv[y - 1]) == n)
        w0 = tuple(range(n, 0, -1))
        lhs = {(i, j) for i, j in edge_pairs(w0, word, h) if j == n}
        rhs = {(i, n) for i in range(n - k + 1, n)}
        if lhs != rhs:
            return f"(2) edges (i,n) at w0 {sorted(lhs)} != {sorted(rhs)} (k={k})"
    return None if applied else "skip"


def check_prop_size_e(w: Permutation, h: HessenbergFunction) -> bool | None:
    s = prop_size_e_status(w.word, h)
    return None if s == "skip" else s is None


def check_prop_chain_w(w: Permutation, h: HessenbergFunction) -> bool | None:
    """A generator avoiding all seven generator patterns has w-bar avoiding them too."""
    if not is_generator_word(w.word, h) or first_contained(w.word, h, GENERATOR7) is not None:
        return None
    if not is_well_organized_word(w.word):
        return False
    return first_contained(wbar_chain_words(w.word)[-1], h, GENERATOR7) is None
