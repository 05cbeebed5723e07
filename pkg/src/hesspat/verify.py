"""Exhaustive verification sweeps over all (w, h) pairs of a given size.

Sweep order is h (lexicographic) outer, w (Lehmer rank) inner.  Work is split
per h; partial results are merged back in h order, so a report does not depend
on the number of workers.  A failing pair never stops a sweep.
"""

from __future__ import annotations

import json
import math
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import _tables
from .gkm import degrees_of_mask, fixed_point_mask, isomorphism_check, phi_pairs
from .hessenberg import (
    GeneratorUniquenessError,
    HessenbergFunction,
    corresponding_generator_word,
    enumerate_hessenberg,
    generator_index,
    generator_words,
    order_key,
)
from .order import bruhat_closure, bruhat_leq_words
from .patterns import FIVE_PATTERNS, GENERAL10, GENERATOR7, SIX_PLUS_25314, SIX, first_contained, find_pattern_word
from .perm_core import Permutation, avoids_classical, format_word, unrank
from .wellorg import (
    check_prop_chain_w,
    is_well_organized_word,
    lemma_kind_status,
    prop_organized_status,
    prop_size_e_status,
    prop_wbar_failure,
    wbar_chain_words,
    y_values,
)

JOBS_ENV = "HESSPAT_JOBS"
MAX_FAILURES_KEPT = 200


@dataclass
class Failure:
    w: str
    h: str
    detail: str


@dataclass
class UnitResult:
    checked: int = 0
    swept: int = 0
    failures: list[Failure] = field(default_factory=list)
    skips: Counter = field(default_factory=Counter)
    observations: list[Failure] = field(default_factory=list)

    def merge(self, other: "UnitResult") -> None:
        self.checked += other.checked
        self.swept += other.swept
        self.failures.extend(other.failures)
        self.skips.update(other.skips)
        self.observations.extend(other.observations)


@dataclass
class VerificationReport:
    theorem_id: str
    statement: str
    n_range: list[int]
    pairs_swept: int
    pairs_checked: int
    failures: list[Failure]
    failure_count: int
    skips: dict[str, int]
    wall_time: float
    complete: bool = True
    jobs: int = 1
    observations: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.failure_count:
            return "FAIL"
        return "PASS" if self.complete else "INCOMPLETE"

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["status"] = self.status
        d["wall_time"] = round(self.wall_time, 3)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# ---------------------------------------------------------------------------
# per-h context with lazily built caches


class HContext:
    def __init__(self, h: HessenbergFunction):
        self.h = h
        self.n = h.n
        self.g = _tables.group(h.n)
        self.t = _tables.hess_tables(h)
        self.w0 = tuple(range(h.n, 0, -1))
        self._gen_set: set | None = None
        self._degrees: dict[tuple[int, ...], tuple[np.ndarray, np.ndarray, np.ndarray]] = {}

    @property
    def generator_set(self) -> set[tuple[int, ...]]:
        if self._gen_set is None:
            self._gen_set = set(generator_words(self.h))
        return self._gen_set

    def is_generator(self, word) -> bool:
        return word in self.generator_set

    def mask(self, word) -> np.ndarray:
        if word in self.generator_set:
            return self.g.bruhat_matrix[self.g.index[word]]
        return fixed_point_mask(word, self.h)

    def degrees(self, word) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(mask, vertex ranks, degrees) of Gamma_{w,h}."""
        hit = self._degrees.get(word)
        if hit is None:
            m = self.mask(word)
            verts, degs = degrees_of_mask(m, self.h)
            hit = (m, verts, degs)
            if word in self.generator_set:
                self._degrees[word] = hit
        return hit

    def degree_range(self, word) -> tuple[int, int]:
        _, _, degs = self.degrees(word)
        return int(degs.min()), int(degs.max())

    def contains(self, word, name: str) -> bool:
        return find_pattern_word(word, self.h, name) is not None


def _fmt(word) -> str:
    return format_word(word)


Check = Callable[[HContext, Sequence[tuple[int, ...]], UnitResult, bool], None]


@dataclass(frozen=True)
class Theorem:
    id: str
    statement: str
    check: Check
    uses_h: bool = True
    h_filter: Callable[[HessenbergFunction], bool] | None = None
    translated: bool = False  # touches Omega_{w,h}^T for non-generator w


# ---------------------------------------------------------------------------
# checks


def _fail(res: UnitResult, word, h, detail: str) -> None:
    if len(res.failures) < MAX_FAILURES_KEPT:
        res.failures.append(Failure(_fmt(word), "-" if h is None else str(h), detail))
    else:
        res.skips["failures beyond retention cap"] += 1


def _observe(res: UnitResult, word, h, detail: str, on: bool) -> None:
    if on:
        res.observations.append(Failure(_fmt(word), str(h) if h is not None else "-", detail))


def check_interval(ctx: HContext, words, res: UnitResult, observe: bool) -> None:
    g, t = ctx.g, ctx.t
    top = g.longest
    for w in words:
        res.swept += 1
        if not ctx.is_generator(w):
            res.skips["not a generator"] += 1
            continue
        res.checked += 1
        r = g.index[w]
        h_int = t.up[r] & t.down[top]
        b_int = g.bruhat_up[r] & g.bruhat_down[top]
        if h_int != b_int:
            _fail(res, w, ctx.h, f"|[w,w0]_h| = {bin(h_int).count('1')} != |[w,w0]| = {bin(b_int).count('1')}")
        else:
            _observe(res, w, ctx.h, f"[w,w0]_h = [w,w0], {bin(b_int).count('1')} elements", observe)


def check_hchain(ctx: HContext, words, res: UnitResult, observe: bool) -> None:
    g, t = ctx.g, ctx.t
    for w in words:
        res.swept += 1
        res.checked += 1
        r = g.index[w]
        if t.up[r] & ~g.bruhat_up[r]:
            _fail(res, w, ctx.h, "some v with w <=_h v is not Bruhat-above w")
        missing = t.up[r] & ~t.saturated_up[r]
        if missing:
            v = g.words[_tables.bits_to_ranks(missing)[0]]
            _fail(res, w, ctx.h, f"no saturated h-chain from {_fmt(w)} to {_fmt(v)}")


def check_bruhat_chain(ctx: HContext, words, res: UnitResult, observe: bool) -> None:
    g = ctx.g
    full = _tables.hess_tables(HessenbergFunction.full(ctx.n))
    for w in words:
        res.swept += 1
        res.checked += 1
        r = g.index[w]
        missing = g.bruhat_up[r] & ~full.saturated_up[r]
        extra = full.saturated_up[r] & ~g.bruhat_up[r]
        if missing or extra:
            _fail(res, w, None, f"saturated-chain closure differs from [w,w0] ({bin(missing).count('1')} missing)")


def check_increasing(ctx: HContext, words, res: UnitResult, observe: bool) -> None:
    t = ctx.t
    cols = t.cols
    if cols.size == 0:
        for w in words:
            res.swept += 1
            res.skips["no admissible pairs"] += 1
        return
    for w in words:
        res.swept += 1
        if not ctx.is_generator(w):
            res.skips["not a generator"] += 1
            continue
        res.checked += 1
        mask, verts, degs = ctx.degrees(w)
        deg_full = np.zeros(ctx.g.size, dtype=np.int64)
        deg_full[verts] = degs
        nbr = t.neighbors[verts]
        step_up = ctx.g.ascent[verts][:, cols] & mask[nbr]
        bad = step_up & (degs[:, None] > deg_full[nbr])
        if bad.any():
            a, p = np.argwhere(bad)[0]
            u, v = ctx.g.words[verts[a]], ctx.g.words[nbr[a, p]]
            _fail(res, w, ctx.h, f"deg({_fmt(u)}) = {degs[a]} > deg({_fmt(v)}) = {deg_full[nbr[a, p]]}")
        if deg_full[ctx.g.index[w]] > deg_full[ctx.g.longest]:
            _fail(res, w, ctx.h, "deg(w) > deg(w0)")


def check_injection(ctx: HContext, words, res: UnitResult, observe: bool) -> None:
    t, g = ctx.t, ctx.g
    pairs = t.pairs
    for w in words:
        res.swept += 1
        if not ctx.is_generator(w):
            res.skips["not a generator"] += 1
            continue
        res.checked += 1
        mask, verts, _ = ctx.degrees(w)
        edges = {}
        nbr_rows = t.neighbors[verts].tolist() if pairs else [[] for _ in verts]
        for r, row in zip(verts.tolist(), nbr_rows):
            edges[r] = {p: s for p, s in zip(pairs, row) if mask[s]}
        n_maps = 0
        for r, E in edges.items():
            u = g.words[r]
            E_u = set(E)
            for (a, b), s in E.items():
                if u[a - 1] > u[b - 1]:
                    continue
                n_maps += 1
                E_v = set(edges[s])
                m = phi_pairs(u, a, b, E_u)
                image = list(m.values())
                if not set(image) <= E_v:
                    _fail(res, w, ctx.h, f"phi({_fmt(u)}->{_fmt(g.words[s])}) leaves E(v): {sorted(set(image) - E_v)}")
                elif len(set(image)) != len(image):
                    _fail(res, w, ctx.h, f"phi({_fmt(u)}->{_fmt(g.words[s])}) is not injective")
        res.skips["phi maps checked"] += n_maps


def _regular_vs_patterns(names: Sequence[str], generators_only: bool, direction: str) -> Check:
    def check(ctx: HContext, words, res: UnitResult, observe: bool) -> None:
        for w in words:
            res.swept += 1
            if generators_only and not ctx.is_generator(w):
                res.skips["not a generator"] += 1
                continue
            wit = first_contained(w, ctx.h, names)
            if direction == "contains" and wit is None:
                res.skips["avoids the patterns"] += 1
                continue
            if direction == "avoids" and wit is not None:
                res.skips["contains a pattern"] += 1
                continue
            res.checked += 1
            lo, hi = ctx.degree_range(w)
            regular = lo == hi
            wtxt = "avoids all" if wit is None else f"contains {wit.pattern} at {wit}"
            _observe(res, w, ctx.h, f"{'regular' if regular else 'irregular'} degrees ({lo},{hi}); {wtxt}", observe)
            if regular != (wit is None):
                _fail(res, w, ctx.h, f"{'regular' if regular else 'irregular'} degrees ({lo},{hi}) but {wtxt}")

    return check


def check_iso(ctx: HContext, words, res: UnitResult, observe: bool) -> None:
    for w in words:
        res.swept += 1
        res.checked += 1
        if not isomorphism_check(Permutation(w), ctx.h):
            _fail(res, w, ctx.h, "u -> w w~^{-1} u is not an isomorphism Gamma_{w~,h} -> Gamma_{w,h}")


def check_cardinality(ctx: HContext, words, res: UnitResult, observe: bool) -> None:
    g = ctx.g
    for w in words:
        res.swept += 1
        res.checked += 1
        gen = corresponding_generator_word(w, ctx.h)
        a = int(fixed_point_mask(w, ctx.h).sum())
        b = int(g.bruhat_matrix[g.index[gen]].sum())
        if a != b:
            _fail(res, w, ctx.h, f"|Omega_w| = {a} != |Omega_w~| = {b}")


def check_unique_generator(ctx: HContext, words, res: UnitResult, observe: bool) -> None:
    try:
        index = generator_index(ctx.h)
    except GeneratorUniquenessError as exc:
        res.swept += len(words)
        _fail(res, ctx.w0, ctx.h, str(exc))
        return
    for w in words:
        res.swept += 1
        res.checked += 1
        gen = index.get(order_key(w, ctx.h))
        if gen is None:
            _fail(res, w, ctx.h, "no generator shares the relative order of w on admissible pairs")
        elif tuple(w) in ctx.generator_set and gen != tuple(w):
            _fail(res, w, ctx.h, f"generator maps to a different generator {_fmt(gen)}")


def _generator_check(status: Callable[[HContext, tuple[int, ...]], str | None], skip_reason: str = "hypothesis fails") -> Check:
    def check(ctx: HContext, words, res: UnitResult, observe: bool) -> None:
        for w in words:
            res.swept += 1
            if not ctx.is_generator(w):
                res.skips["not a generator"] += 1
                continue
            s = status(ctx, w)
            if s == "skip":
                res.skips[skip_reason] += 1
                continue
            res.checked += 1
            if s is not None:
                _fail(res, w, ctx.h, s)

    return check


def _lemma_y(ctx: HContext, w) -> str | None:
    inv = {x: p for p, x in enumerate(w, 1)}
    ys = y_values(w)
    for i in range(1, len(ys)):
        if inv[ys[i]] > ctx.h(inv[ys[i - 1]]):
            return f"w^-1(y_{i}) = {inv[ys[i]]} > h(w^-1(y_{i - 1})) = {ctx.h(inv[ys[i - 1]])}"
    return None


def _lemma_1324(ctx: HContext, w) -> str | None:
    if ctx.contains(w, "1324h"):
        return "skip"
    return None if is_well_organized_word(w) else "avoids 1324h but is not well-organized"


def _prop_wbar(ctx: HContext, w) -> str | None:
    if not is_well_organized_word(w):
        return "skip"
    return prop_wbar_failure(w, ctx.h)


def check_prop_organized(ctx: HContext, words, res: UnitResult, observe: bool) -> None:
    for w in words:
        res.swept += 1
        if not ctx.is_generator(w):
            res.skips["not a generator"] += 1
            continue
        if not is_well_organized_word(w):
            res.skips["not well-organized"] += 1
            continue
        r = len(y_values(w)) - 1
        if r == 0:
            res.skips["r = 0"] += 1
            continue
        res.checked += 1
        for m in range(1, r + 1):
            s = prop_organized_status(w, ctx.h, m)
            if s == "skip":
                res.skips["(w, m) hypothesis h(p) >= b fails"] += 1
            elif s is not None:
                _fail(res, w, ctx.h, s)
            else:
                res.skips["(w, m) verified"] += 1


def _chain_w(ctx: HContext, w) -> str | None:
    ok = check_prop_chain_w(Permutation(w), ctx.h)
    if ok is None:
        return "skip"
    if ok:
        return None
    if not is_well_organized_word(w):
        return "avoids the seven patterns but is not well-organized"
    wbar = wbar_chain_words(w)[-1]
    wit = first_contained(wbar, ctx.h, GENERATOR7)
    return f"w-bar = {_fmt(wbar)} contains {wit.pattern} at {wit}"


def _lemma_2413(ctx: HContext, w) -> str | None:
    if any(ctx.contains(w, p) for p in ("1243h", "2134h", "1423h")):
        return "skip"
    a, b = ctx.contains(w, "2413h"), ctx.contains(w, "25314h")
    return None if a == b else f"2413h {'present' if a else 'absent'} but 25314h {'present' if b else 'absent'}"


def _six_plus_25314(ctx: HContext, w) -> str | None:
    a = first_contained(w, ctx.h, GENERATOR7) is None
    b = first_contained(w, ctx.h, SIX_PLUS_25314) is None
    return None if a == b else f"avoids B: {a}, avoids B with 25314h: {b}"


def check_allpatterns_1(ctx: HContext, words, res: UnitResult, observe: bool) -> None:
    for w in words:
        res.swept += 1
        res.checked += 1
        gen = corresponding_generator_word(w, ctx.h)
        for p in SIX:
            if ctx.contains(w, p) != ctx.contains(gen, p):
                _fail(res, w, ctx.h, f"{p}: w {'contains' if ctx.contains(w, p) else 'avoids'}, w~ = {_fmt(gen)} differs")


def check_allpatterns_2(ctx: HContext, words, res: UnitResult, observe: bool) -> None:
    for w in words:
        res.swept += 1
        if ctx.contains(w, "1324h"):
            res.skips["contains 1324h"] += 1
            continue
        res.checked += 1
        gen = corresponding_generator_word(w, ctx.h)
        a = first_contained(w, ctx.h, FIVE_PATTERNS) is not None
        b = ctx.contains(gen, "25314h")
        if a != b:
            _fail(res, w, ctx.h, f"w contains a 5-pattern: {a}; w~ = {_fmt(gen)} contains 25314h: {b}")


def check_classical(ctx: HContext, words, res: UnitResult, observe: bool) -> None:
    for w in words:
        res.swept += 1
        res.checked += 1
        lo, hi = ctx.degree_range(w)
        classical = avoids_classical(Permutation(w), [(2, 1, 4, 3), (1, 3, 2, 4)])
        assoc = first_contained(w, ctx.h, GENERAL10) is None
        if (lo == hi) != classical or assoc != classical:
            _fail(res, w, ctx.h, f"regular={lo == hi}, avoids 2143/1324: {classical}, avoids C: {assoc}")


def check_permutohedral(ctx: HContext, words, res: UnitResult, observe: bool) -> None:
    for w in words:
        res.swept += 1
        res.checked += 1
        lo, hi = ctx.degree_range(w)
        wit = first_contained(w, ctx.h, GENERAL10)
        if lo != hi or wit is not None:
            _fail(res, w, ctx.h, f"degrees ({lo},{hi}); witness {wit}")


def check_bruhat_oracle(ctx: HContext, words, res: UnitResult, observe: bool) -> None:
    g = ctx.g
    closure = bruhat_closure(ctx.n)
    for u in words:
        res.swept += 1
        above = closure[u]
        row = g.bruhat_matrix[g.index[u]]
        for r, v in enumerate(g.words):
            res.checked += 1
            truth = v in above
            if bruhat_leq_words(u, v) != truth or bool(row[r]) != truth:
                _fail(res, u, None, f"vs {_fmt(v)}: closure says {truth}")


def _is_full(h: HessenbergFunction) -> bool:
    return h == HessenbergFunction.full(h.n)


def _is_permutohedral(h: HessenbergFunction) -> bool:
    return h == HessenbergFunction.permutohedral(h.n)


THEOREMS: dict[str, Theorem] = {
    t.id: t
    for t in [
        Theorem("T-interval", "generator w: [w, w0]_h = [w, w0]", check_interval),
        Theorem("T-hchain", "u <=_h v: u <= v and a saturated h-chain joins them", check_hchain),
        Theorem("P-chain", "Bruhat chain property: saturated chains reach all of [u, w0]", check_bruhat_chain, uses_h=False),
        Theorem("T-increasing", "generator w: u <=_h v in Gamma_{w,h} implies deg u <= deg v", check_increasing),
        Theorem("L-injection", "generator w: phi_uv is well defined into E(v) and injective", check_injection),
        Theorem("T-irregular", "generator w containing a pattern of B: Gamma_{w,h} irregular",
                _regular_vs_patterns(GENERATOR7, True, "contains")),
        Theorem("T-regular", "generator w avoiding B: Gamma_{w,h} regular",
                _regular_vs_patterns(GENERATOR7, True, "avoids")),
        Theorem("T-generators", "generator w: Gamma_{w,h} regular iff w avoids B",
                _regular_vs_patterns(GENERATOR7, True, "both")),
        Theorem("T-main", "any w: Gamma_{w,h} regular iff w avoids C", _regular_vs_patterns(GENERAL10, False, "both"),
                translated=True),
        Theorem("P-iso", "u -> w w~^{-1} u is an isomorphism Gamma_{w~,h} -> Gamma_{w,h}", check_iso,
                translated=True),
        Theorem("P-card", "|Omega_{w,h}^T| = |Omega_{w~,h}^T|", check_cardinality,
                translated=True),
        Theorem("U-generator", "w~ exists and is unique", check_unique_generator),
        Theorem("L-y", "generator w: w^-1(y_i) <= h(w^-1(y_{i-1}))", _generator_check(_lemma_y)),
        Theorem("L-1324", "generator avoiding 1324h is well-organized",
                _generator_check(_lemma_1324, "contains 1324h")),
        Theorem("L-kind", "well-organized generator: first/second kind under pattern avoidance",
                _generator_check(lambda ctx, w: lemma_kind_status(w, ctx.h))),
        Theorem("P-wbar", "well-organized generator: w-bar generator, [w-bar,w0], edges (i,n)",
                _generator_check(_prop_wbar, "not well-organized")),
        Theorem("P-organized", "phi between consecutive w-bar_m is a bijection of the stated form",
                check_prop_organized),
        Theorem("P-sizeE", "|E(w)| = |E(w-bar)| and the edges (i,n) at w0",
                _generator_check(lambda ctx, w: prop_size_e_status(w, ctx.h), "contains 2143h, 1324h or 2134h")),
        Theorem("P-chainw", "generator avoiding B: so does w-bar", _generator_check(_chain_w, "contains a pattern of B")),
        Theorem("L-2413", "generator avoiding 1243h, 2134h, 1423h: 2413h iff 25314h",
                _generator_check(_lemma_2413, "contains 1243h, 2134h or 1423h")),
        Theorem("L-allpatterns-1", "for p in A: w contains p iff w~ does", check_allpatterns_1),
        Theorem("L-allpatterns-2", "w avoiding 1324h: a 5-pattern in w iff 25314h in w~", check_allpatterns_2),
        Theorem("R-412", "generator: avoiding B iff avoiding A plus 25314h", _generator_check(_six_plus_25314)),
        Theorem("C-classical", "h = (n,...,n): regular iff w avoids 2143 and 1324", check_classical,
                h_filter=_is_full, translated=True),
        Theorem("C-permutohedral", "h = (2,3,...,n,n): every Gamma_{w,h} regular", check_permutohedral,
                h_filter=_is_permutohedral, translated=True),
        Theorem("O-bruhat", "tableau criteria agree with the closure of length-raising swaps", check_bruhat_oracle,
                uses_h=False),
    ]
}

# every registered statement plus the oracle cross-check, in report order
DEFAULT_SUITE = tuple(THEOREMS)

TRANSLATION_NOTE = (
    "non-generator w: Omega_{w,h}^T and its edges are taken as w w~^{-1} [w~, w0], "
    "i.e. E_{w,h}(u) = {(i,j) admissible : u(i,j) in Omega_{w,h}^T}"
)


# ---------------------------------------------------------------------------
# driver


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _units(theorem: Theorem, n: int, hess: HessenbergFunction | None) -> list[HessenbergFunction]:
    if not theorem.uses_h:
        return [HessenbergFunction.full(n)]
    hs = [hess] if hess is not None else list(enumerate_hessenberg(n))
    if theorem.h_filter is not None:
        hs = [h for h in hs if theorem.h_filter(h)]
    return hs


def _run_unit(
    theorem_id: str, h_values: tuple[int, ...], only: tuple[tuple[int, ...], ...] | None, observe: bool
) -> UnitResult:
    theorem = THEOREMS[theorem_id]
    h = HessenbergFunction(h_values)
    ctx = HContext(h)
    words = list(only) if only is not None else ctx.g.words
    res = UnitResult()
    theorem.check(ctx, words, res, observe)
    return res


def verify_theorem(
    theorem_id: str,
    n: int | Iterable[int],
    jobs: int | None = None,
    perm: Permutation | None = None,
    hess: HessenbergFunction | None = None,
    time_limit: float | None = None,
    sample: int | None = None,
    seed: int = 0,
) -> VerificationReport:
    """Run one statement over every (w, h) in scope for each size in ``n``.

    ``perm`` / ``hess`` restrict the sweep (observations are then recorded).
    ``sample`` checks that many uniformly drawn pairs per size instead of all
    of them (drawn with ``seed``; meant for n = 7 and beyond).
    ``time_limit`` (seconds) stops scheduling new h-units once exceeded and
    flags the report incomplete.
    """
    if theorem_id not in THEOREMS:
        raise KeyError(f"unknown theorem id {theorem_id!r}; known: {', '.join(THEOREMS)}")
    theorem = THEOREMS[theorem_id]
    sizes = [n] if isinstance(n, int) else list(n)
    if any(k < 1 for k in sizes):
        raise ValueError("n must be >= 1")
    jobs = jobs or default_jobs()
    observe = perm is not None or hess is not None
    start = time.perf_counter()
    total = UnitResult()
    complete = True
    for size in sizes:
        if perm is not None and perm.n != size or hess is not None and hess.n != size:
            raise ValueError(f"restriction sizes do not match n={size}")
        units = _units(theorem, size, hess)
        if sample is not None:
            args = _sampled_args(theorem_id, units, size, sample, seed)
        else:
            only = (perm.word,) if perm is not None else None
            args = [(theorem_id, h.values, only, observe) for h in units]
        if jobs > 1 and len(args) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futures = [pool.submit(_run_unit, *a) for a in args]
                for fut in futures:
                    if time_limit is not None and time.perf_counter() - start > time_limit:
                        complete = False
                        fut.cancel()
                        continue
                    total.merge(fut.result())
        else:
            for a in args:
                if time_limit is not None and time.perf_counter() - start > time_limit:
                    complete = False
                    break
                total.merge(_run_unit(*a))
    failure_count = len(total.failures) + total.skips.pop("failures beyond retention cap", 0)
    return VerificationReport(
        theorem_id=theorem_id,
        statement=theorem.statement,
        n_range=sizes,
        pairs_swept=total.swept,
        pairs_checked=total.checked,
        failures=total.failures,
        failure_count=failure_count,
        skips=dict(sorted(total.skips.items())),
        wall_time=time.perf_counter() - start,
        complete=complete,
        jobs=jobs,
        observations=total.observations,
        notes=[TRANSLATION_NOTE] if theorem.translated else [],
    )


def _sampled_args(theorem_id: str, units: list[HessenbergFunction], size: int, sample: int, seed: int) -> list[tuple]:
    if sample < 1:
        raise ValueError("sample must be >= 1")
    rng = np.random.default_rng(seed)
    n_words = math.factorial(size)
    hs = rng.integers(len(units), size=sample)
    ws = rng.integers(n_words, size=sample)
    chosen: dict[int, set[int]] = {}
    for a, b in zip(hs.tolist(), ws.tolist()):
        chosen.setdefault(a, set()).add(b)
    args = []
    for a in sorted(chosen):
        words = tuple(unrank(r, size) for r in sorted(chosen[a]))
        args.append((theorem_id, units[a].values, words, False))
    return args


def predicted_pairs(n: int) -> int:
    return math.factorial(n) * _tables.catalan(n)


# ---------------------------------------------------------------------------
# counterexample search


def _pred_main(ctx: HContext, w) -> str | None:
    lo, hi = ctx.degree_range(w)
    wit = first_contained(w, ctx.h, GENERAL10)
    if (lo == hi) != (wit is None):
        return f"degrees ({lo},{hi}), witness {wit}"
    return None


def _pred_generator7(ctx: HContext, w) -> str | None:
    if not ctx.is_generator(w):
        return None
    lo, hi = ctx.degree_range(w)
    wit = first_contained(w, ctx.h, GENERATOR7)
    if (lo == hi) != (wit is None):
        return f"degrees ({lo},{hi}), witness {wit}"
    return None


def _pred_increasing_nongenerator(ctx: HContext, w) -> str | None:
    if ctx.is_generator(w):
        return None
    mask, verts, degs = ctx.degrees(w)
    t, g = ctx.t, ctx.g
    if t.cols.size == 0:
        return None
    deg_full = np.zeros(g.size, dtype=np.int64)
    deg_full[verts] = degs
    reach = t.up
    members = set(verts.tolist())
    for a, u in enumerate(verts.tolist()):
        for v in _tables.bits_to_ranks(reach[u]):
            if v in members and deg_full[u] > deg_full[v]:
                return f"{_fmt(g.words[u])} <=_h {_fmt(g.words[v])} but degrees {deg_full[u]} > {deg_full[v]}"
    return None


def _pred_unique(ctx: HContext, w) -> str | None:
    key = order_key(w, ctx.h)
    hits = [gw for gw in generator_words(ctx.h) if order_key(gw, ctx.h) == key]
    return None if len(hits) == 1 else f"{len(hits)} matching generators"


PREDICATES: dict[str, tuple[str, Callable[[HContext, tuple[int, ...]], str | None]]] = {
    "main": ("regular iff avoids C, all w", _pred_main),
    "generator7": ("regular iff avoids B, generators", _pred_generator7),
    "increasing-nongenerator": ("u <=_h v implies deg u <= deg v for non-generator w (not proved)",
                                _pred_increasing_nongenerator),
    "generator-unique": ("the corresponding generator is unique", _pred_unique),
}


def find_counterexample(predicate_id: str, n: int) -> tuple[Permutation, HessenbergFunction, str] | None:
    """First (w, h) in sweep order violating the predicate, or None."""
    if predicate_id not in PREDICATES:
        raise KeyError(f"unknown predicate {predicate_id!r}; known: {', '.join(PREDICATES)}")
    pred = PREDICATES[predicate_id][1]
    for h in enumerate_hessenberg(n):
        ctx = HContext(h)
        for w in ctx.g.words:
            detail = pred(ctx, w)
            if detail is not None:
                return Permutation(w), h, detail
    return None


# ---------------------------------------------------------------------------
# human-readable output


def format_reports(reports: Sequence[VerificationReport]) -> str:
    rows = [("theorem", "n", "status", "swept", "checked", "failures", "skips", "time[s]")]
    for r in reports:
        skips = sum(v for k, v in r.skips.items() if not k.startswith("(w, m) verified") and k != "phi maps checked")
        rows.append((
            r.theorem_id,
            ",".join(str(k) for k in r.n_range),
            r.status,
            str(r.pairs_swept),
            str(r.pairs_checked),
            str(r.failure_count),
            str(skips),
            f"{r.wall_time:.2f}",
        ))
    widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(wd) for cell, wd in zip(row, widths)).rstrip() for row in rows]
    for r in reports:
        for f in r.failures[:5]:
            lines.append(f"  {r.theorem_id} FAIL w={f.w} h={f.h}: {f.detail}")
        for o in r.observations[:20]:
            lines.append(f"  {r.theorem_id} w={o.w} h={o.h}: {o.detail}")
    return "\n".join(lines) + "\n"


def sweep_rows(n: int, hess: HessenbergFunction | None = None) -> Iterable[dict]:
    """Per-(w, h) classification rows for CSV export."""
    hs = [hess] if hess is not None else enumerate_hessenberg(n)
    for h in hs:
        ctx = HContext(h)
        for w in ctx.g.words:
            lo, hi = ctx.degree_range(w)
            wit_b = first_contained(w, h, GENERATOR7)
            wit_c = first_contained(w, h, GENERAL10)
            first = wit_c or wit_b
            yield {
                "w": _fmt(w),
                "h": str(h),
                "is_generator": ctx.is_generator(w),
                "regular": lo == hi,
                "min_deg": lo,
                "max_deg": hi,
                "avoided_B": wit_b is None,
                "avoided_C": wit_c is None,
                "first_witness": "" if first is None else f"{first.pattern}{first}",
            }
