"""GKM graph Gamma_h and the induced subgraphs Gamma_{w,h}.

Gamma_h has vertex set S_n and an edge u -- u(i,j) for every i < j <= h(i).
Gamma_{w,h} is induced by the torus fixed points Omega_{w,h}^T, which are
[w, w0] for a generator w and w w~^{-1} [w~, w0] otherwise.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _tables
from .hessenberg import (
    HessenbergFunction,
    _check_sizes,
    corresponding_generator_word,
    is_generator_word,
)
from .order import TABLE_MAX_N, bruhat_leq_words
from .perm_core import (
    Permutation,
    Transposition,
    compose,
    format_word,
    inverse_word,
    swap_positions,
)


def gamma_h_neighbors(u: Permutation, h: HessenbergFunction) -> list[tuple[Transposition, Permutation]]:
    _check_sizes(u, h)
    return [(Transposition(i, j), Permutation(swap_positions(u.word, i, j))) for i, j in h.pairs]


def translation(word: tuple[int, ...], h: HessenbergFunction) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(w~, sigma) with sigma = w w~^{-1}, so Omega_{w,h}^T = sigma [w~, w0]."""
    gen = corresponding_generator_word(word, h)
    return gen, compose(word, inverse_word(gen))


def _upper_set_bfs(word: tuple[int, ...]) -> set[tuple[int, ...]]:
    n = len(word)
    seen = {word}
    queue = deque([word])
    while queue:
        x = queue.popleft()
        for i in range(n):
            for j in range(i + 1, n):
                if x[i] < x[j]:
                    y = swap_positions(x, i + 1, j + 1)
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
    return seen


def fixed_point_mask(word: tuple[int, ...], h: HessenbergFunction) -> np.ndarray:
    """Bool mask over ranks of S_n marking Omega_{w,h}^T (n <= 7)."""
    g = _tables.group(h.n)
    gen, sigma = translation(word, h)
    base = g.bruhat_matrix[g.index[gen]]
    if gen == tuple(word):
        return base.copy()
    mask = np.zeros(g.size, dtype=bool)
    mask[g.left_translate(sigma)[base]] = True
    return mask


def fixed_points(w: Permutation, h: HessenbergFunction) -> frozenset[Permutation]:
    """Omega_{w,h}^T."""
    _check_sizes(w, h)
    if h.n <= TABLE_MAX_N:
        g = _tables.group(h.n)
        return frozenset(Permutation(g.words[r]) for r in np.flatnonzero(fixed_point_mask(w.word, h)))
    gen, sigma = translation(w.word, h)
    return frozenset(Permutation(compose(sigma, u)) for u in _upper_set_bfs(gen))


@dataclass(frozen=True)
class EdgeSet:
    """E_{w,h}(u): transpositions (i, j) with {u, u(i,j)} an edge of Gamma_{w,h}."""

    at: Permutation
    transpositions: tuple[Transposition, ...]

    def __len__(self) -> int:
        return len(self.transpositions)

    def __contains__(self, t) -> bool:
        return Transposition(*t) in self.transpositions

    def pairs(self) -> set[tuple[int, int]]:
        return {(t.i, t.j) for t in self.transpositions}


def _in_fixed_points(word: tuple[int, ...], base: tuple[int, ...], h: HessenbergFunction) -> bool:
    gen, sigma = translation(base, h)
    return bruhat_leq_words(gen, compose(inverse_word(sigma), word))


def edge_pairs(u: tuple[int, ...], w: tuple[int, ...], h: HessenbergFunction) -> list[tuple[int, int]]:
    """E_{w,h}(u) for a generator w, as plain pairs: u(i,j) >= w."""
    return [(i, j) for i, j in h.pairs if bruhat_leq_words(w, swap_positions(u, i, j))]


def edge_set(u: Permutation, w: Permutation, h: HessenbergFunction) -> EdgeSet:
    """E_{w,h}(u).

    For a generator w this is {(i,j) : i < j <= h(i), u(i,j) >= w}.  For any
    other w the set is read off through the translation u -> w w~^{-1} u,
    which amounts to asking u(i,j) in Omega_{w,h}^T.
    """
    _check_sizes(u, h)
    _check_sizes(w, h)
    if not _in_fixed_points(u.word, w.word, h):
        raise ValueError(f"{u} is not a fixed point of Omega_{{{w},h}} for h={h}")
    if is_generator_word(w.word, h):
        pairs = edge_pairs(u.word, w.word, h)
    else:
        pairs = [(i, j) for i, j in h.pairs if _in_fixed_points(swap_positions(u.word, i, j), w.word, h)]
    return EdgeSet(u, tuple(Transposition(i, j) for i, j in pairs))


@dataclass(frozen=True)
class InducedSubgraph:
    """Gamma_{w,h}; vertices as sorted ranks with their degrees."""

    w: Permutation
    h: HessenbergFunction
    ranks: tuple[int, ...]
    degrees: tuple[int, ...]

    @property
    def vertices(self) -> list[Permutation]:
        g = _tables.group(self.h.n)
        return [Permutation(g.words[r]) for r in self.ranks]

    def degree(self, u: Permutation) -> int:
        g = _tables.group(self.h.n)
        return self.degrees[self.ranks.index(g.index[u.word])]

    def degree_map(self) -> dict[Permutation, int]:
        return dict(zip(self.vertices, self.degrees))

    def edges(self) -> list[tuple[Permutation, Permutation, Transposition]]:
        """Undirected edges, each listed once with the lower-rank endpoint first."""
        t = _tables.hess_tables(self.h)
        g = t.g
        members = set(self.ranks)
        out = []
        for r in self.ranks:
            for (i, j), s in zip(t.pairs, t.neighbors[r].tolist()):
                if s in members and r < s:
                    out.append((Permutation(g.words[r]), Permutation(g.words[s]), Transposition(i, j)))
        return out

    def __len__(self) -> int:
        return len(self.ranks)


def degrees_of_mask(mask: np.ndarray, h: HessenbergFunction) -> tuple[np.ndarray, np.ndarray]:
    """(vertex ranks, their degrees) of the subgraph of Gamma_h induced by ``mask``."""
    t = _tables.hess_tables(h)
    verts = np.flatnonzero(mask)
    if t.cols.size == 0:
        return verts, np.zeros(verts.size, dtype=np.int64)
    return verts, mask[t.neighbors[verts]].sum(axis=1)


def induced_subgraph(w: Permutation, h: HessenbergFunction) -> InducedSubgraph:
    _check_sizes(w, h)
    if h.n > TABLE_MAX_N:
        raise ValueError(f"induced subgraphs are materialised only for n <= {TABLE_MAX_N}")
    verts, degs = degrees_of_mask(fixed_point_mask(w.word, h), h)
    return InducedSubgraph(w, h, tuple(verts.tolist()), tuple(degs.tolist()))


def is_regular(g: InducedSubgraph) -> tuple[bool, tuple[int, int]]:
    """(all degrees equal, (min degree, max degree))."""
    if not g.degrees:
        raise ValueError("regularity of an empty graph is undefined")
    lo, hi = min(g.degrees), max(g.degrees)
    return lo == hi, (lo, hi)


def phi_pairs(
    u: tuple[int, ...], a: int, b: int, E_u: set[tuple[int, int]]
) -> dict[tuple[int, int], tuple[int, int]]:
    """The map phi_uv on E_{w,h}(u) for v = u(a,b), as plain pairs."""
    out = {}
    for i, j in E_u:
        if i == a and j > b and (b, j) not in E_u:
            out[(i, j)] = (b, j)
        elif i < a and j == b and (i, a) not in E_u:
            out[(i, j)] = (i, a)
        else:
            out[(i, j)] = (i, j)
    return out


def phi(u: Permutation, v: Permutation, w: Permutation, h: HessenbergFunction) -> dict[Transposition, Transposition]:
    """phi_uv: E_{w,h}(u) -> E_{w,h}(v) for an h-edge u < v = u(a,b) of Gamma_{w,h}."""
    for x in (u, v, w):
        _check_sizes(x, h)
    if not is_generator_word(w.word, h):
        raise ValueError(f"{w} is not a generator for h={h}")
    diff = [p for p in range(1, u.n + 1) if u[p] != v[p]]
    if len(diff) != 2:
        raise ValueError(f"{u} and {v} do not differ by a transposition")
    a, b = diff
    if b > h(a) or u[a] > u[b]:
        raise ValueError(f"{u} -> {v} is not an upward h-step for h={h}")
    if not bruhat_leq_words(w.word, u.word):
        raise ValueError(f"{u} is not a vertex of Gamma_{{{w},h}}")
    E_u = set(edge_pairs(u.word, w.word, h))
    return {Transposition(*k): Transposition(*val) for k, val in sorted(phi_pairs(u.word, a, b, E_u).items())}


def isomorphism_check(w: Permutation, h: HessenbergFunction) -> bool:
    """u -> w w~^{-1} u maps Gamma_{w~,h} isomorphically onto Gamma_{w,h}."""
    _check_sizes(w, h)
    g = _tables.group(h.n)
    t = _tables.hess_tables(h)
    gen, sigma = translation(w.word, h)
    src = g.bruhat_matrix[g.index[gen]]
    dst = fixed_point_mask(w.word, h)
    perm = g.left_translate(sigma)
    src_v = np.flatnonzero(src)
    img = perm[src_v]
    if img.size != np.unique(img).size or not dst[img].all() or int(dst.sum()) != src_v.size:
        return False
    # an edge u -- u(i,j) must map to the edge sigma u -- sigma u(i,j), and vice versa
    src_nbr = t.neighbors[src_v]
    img_nbr = t.neighbors[img]
    if not np.array_equal(perm[src_nbr], img_nbr):
        return False
    return bool(np.array_equal(src[src_nbr], dst[img_nbr]))


def to_dot(g: InducedSubgraph, show_excluded: bool = False) -> str:
    """Graphviz rendering; max-degree vertices are filled black when the graph is irregular."""
    tab = _tables.group(g.h.n)
    hess = _tables.hess_tables(g.h)
    lo, hi = min(g.degrees), max(g.degrees)
    deg = dict(zip(g.ranks, g.degrees))
    w0 = tab.longest
    base = tab.index[g.w.word]
    lines = [
        "graph Gamma {",
        f'  label="Gamma_{{w,h}} for w={g.w}, h={g.h}";',
        "  node [shape=circle, style=filled, fontsize=10];",
    ]
    shown = range(tab.size) if show_excluded else g.ranks
    for r in shown:
        name = format_word(tab.words[r])
        if r not in deg:
            lines.append(f'  "{name}" [fillcolor=gray, fontcolor=gray40, excluded=true];')
            continue
        attrs = [f"degree={deg[r]}"]
        if lo != hi and deg[r] != lo:
            attrs.append("fillcolor=black, fontcolor=white, irregular=true")
        else:
            attrs.append("fillcolor=firebrick")
        if r == base:
            attrs.append("shape=doublecircle")
        if r == w0:
            attrs.append("shape=box")
        lines.append(f'  "{name}" [{", ".join(attrs)}];')
    members = set(g.ranks)
    for r in shown:
        for (i, j), s in zip(hess.pairs, hess.neighbors[r].tolist()):
            if s <= r or (not show_excluded and s not in members):
                continue
            inside = r in members and s in members
            style = "" if inside else ", color=gray"
            lines.append(f'  "{format_word(tab.words[r])}" -- "{format_word(tab.words[s])}" [label="({i},{j})"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def degree_table(g: InducedSubgraph) -> Iterable[tuple[str, int]]:
    tab = _tables.group(g.h.n)
    for r, d in zip(g.ranks, g.degrees):
        yield format_word(tab.words[r]), d
