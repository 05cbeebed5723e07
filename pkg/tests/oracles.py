"""Slow reference implementations written straight from the definitions.

Nothing here imports the table-driven code paths; the tests compare the two.
"""

from __future__ import annotations

import itertools
from collections import deque


def words(n):
    return list(itertools.permutations(range(1, n + 1)))


def inv_count(w):
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def swap(w, i, j):
    w = list(w)
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


def compose(a, b):
    """(a b)(x) = a(b(x))."""
    return tuple(a[x - 1] for x in b)


def inverse(w):
    out = [0] * len(w)
    for p, x in enumerate(w, 1):
        out[x - 1] = p
    return tuple(out)


def admissible(h):
    n = len(h)
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if j <= h[i - 1]]


def reach_up(u, pairs):
    """Everything reachable from u by swaps in ``pairs`` that raise the inversion count."""
    seen = {u}
    todo = deque([u])
    while todo:
        x = todo.popleft()
        for i, j in pairs:
            if x[i - 1] < x[j - 1]:
                y = swap(x, i, j)
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
    return seen


def bruhat_up(u):
    n = len(u)
    return reach_up(u, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def hessenberg_functions(n):
    out = []
    for vals in itertools.product(range(1, n + 1), repeat=n):
        if all(vals[i] >= i + 1 for i in range(n)) and all(vals[i] <= vals[i + 1] for i in range(n - 1)):
            out.append(vals)
    return out


def is_generator(w, h):
    winv = inverse(w)
    n = len(w)
    return all(winv[w[i - 1]] <= h[i - 1] for i in range(1, n + 1) if w[i - 1] <= n - 1)


def generator_of(w, h):
    pairs = admissible(h)
    hits = [
        g for g in words(len(w))
        if is_generator(g, h) and all((g[i - 1] < g[j - 1]) == (w[i - 1] < w[j - 1]) for i, j in pairs)
    ]
    assert len(hits) == 1, hits
    return hits[0]


def fixed_points(w, h):
    g = generator_of(w, h)
    sigma = compose(w, inverse(g))
    return {compose(sigma, u) for u in bruhat_up(g)}


def degrees(vertices, h):
    pairs = admissible(h)
    return {u: sum(1 for i, j in pairs if swap(u, i, j) in vertices) for u in vertices}


# -- the eleven associated patterns, one loop each ----------------------------


def has_2143h(w, h):
    n = len(w)
    for i, j, k, l in itertools.combinations(range(1, n + 1), 4):
        if l <= h[i - 1] and w[j - 1] < w[i - 1] < w[l - 1] < w[k - 1]:
            return (i, j, k, l)
    return None


def has_1324h(w, h):
    n = len(w)
    for i, j, k, l in itertools.combinations(range(1, n + 1), 4):
        if l <= h[j - 1] and k <= h[i - 1] and w[i - 1] < w[k - 1] < w[j - 1] < w[l - 1]:
            return (i, j, k, l)
    return None


def has_1243h(w, h):
    n = len(w)
    for i, j, k, l in itertools.combinations(range(1, n + 1), 4):
        if l <= h[j - 1] and j <= h[i - 1] < l and w[i - 1] < w[j - 1] < w[l - 1] < w[k - 1]:
            return (i, j, k, l)
    return None


def has_2134h(w, h):
    n = len(w)
    for i, j, k, l in itertools.combinations(range(1, n + 1), 4):
        if l <= h[k - 1] and k <= h[i - 1] < l and w[j - 1] < w[i - 1] < w[k - 1] < w[l - 1]:
            return (i, j, k, l)
    return None


def has_1423h(w, h):
    n = len(w)
    for i, j, k, l in itertools.combinations(range(1, n + 1), 4):
        if l <= h[j - 1] and k <= h[i - 1] < l and w[i - 1] < w[k - 1] < w[l - 1] < w[j - 1]:
            return (i, j, k, l)
    return None


def has_2314h(w, h):
    n = len(w)
    for i, j, k, l in itertools.combinations(range(1, n + 1), 4):
        if l <= h[j - 1] and k <= h[i - 1] < l and w[k - 1] < w[i - 1] < w[j - 1] < w[l - 1]:
            return (i, j, k, l)
    return None


def has_2413h(w, h):
    n = len(w)
    for i, j, k, l in itertools.combinations(range(1, n + 1), 4):
        if j <= h[i - 1] < k <= h[j - 1] < l <= h[k - 1] and w[k - 1] < w[i - 1] < w[l - 1] < w[j - 1]:
            return (i, j, k, l)
    return None


def _five(w, h, order):
    n = len(w)
    for i, j, k, l, m in itertools.combinations(range(1, n + 1), 5):
        if k <= h[i - 1] < l <= h[j - 1] < m <= h[k - 1]:
            v = dict(zip("ijklm", (w[i - 1], w[j - 1], w[k - 1], w[l - 1], w[m - 1])))
            if all(v[a] < v[b] for a, b in zip(order, order[1:])):
                return (i, j, k, l, m)
    return None


def has_25314h(w, h):
    return _five(w, h, "likmj")


def has_24315h(w, h):
    return _five(w, h, "likjm")


def has_14325h(w, h):
    return _five(w, h, "ilkjm")


def has_15324h(w, h):
    return _five(w, h, "ilkmj")


HAND = {
    "2143h": has_2143h,
    "1324h": has_1324h,
    "1243h": has_1243h,
    "2134h": has_2134h,
    "1423h": has_1423h,
    "2314h": has_2314h,
    "2413h": has_2413h,
    "25314h": has_25314h,
    "24315h": has_24315h,
    "14325h": has_14325h,
    "15324h": has_15324h,
}
