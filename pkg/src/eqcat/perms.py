"""Permutations of ``range(n)`` stored as tuples of images.

``p[i]`` is the image of ``i``; ``compose(p, q)`` applies ``q`` first, so the
symmetric group acts on the left of ``range(n)``.
"""
from functools import lru_cache
from itertools import permutations


def identity(n):
    return tuple(range(n))


def compose(p, q):
    return tuple(p[i] for i in q)


def inverse(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_permutation(p, n=None):
    if n is not None and len(p) != n:
        return False
    return sorted(p) == list(range(len(p)))


@lru_cache(maxsize=None)
def all_perms(n):
    """Every permutation of ``range(n)`` in lexicographic order, identity first."""
    return tuple(permutations(range(n)))


@lru_cache(maxsize=None)
def perm_index(n):
    return {p: i for i, p in enumerate(all_perms(n))}


def cycles(p):
    seen, out = set(), []
    for start in range(len(p)):
        if start in seen:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = p[x]
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def cycle_str(p):
    """1-based cycle notation, ``()`` for the identity."""
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cs)


def from_cycles(n, *cycs):
    """Build a permutation from 1-based cycles, e.g. ``from_cycles(4, (1, 3), (2, 4))``."""
    img = list(range(n))
    for c in cycs:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def act_on_tuple(p, y):
    """Left action on tuples: ``(p.y)[i] = y[p^-1(i)]``."""
    out = [None] * len(y)
    for i, v in enumerate(y):
        out[p[i]] = v
    return tuple(out)


def block_sum(perms):
    out, off = [], 0
    for p in perms:
        out.extend(off + x for x in p)
        off += len(p)
    return tuple(out)


def block_perm(sigma, sizes):
    """Permute consecutive blocks of the given sizes as ``sigma`` permutes ``range(k)``.

    Block ``i`` is moved, internally unchanged, to slot ``sigma[i]``.
    """
    k = len(sigma)
    inv = inverse(sigma)
    start = [0] * k
    off = 0
    for slot in range(k):
        b = inv[slot]
        start[b] = off
        off += sizes[b]
    out = []
    for b in range(k):
        out.extend(start[b] + t for t in range(sizes[b]))
    return tuple(out)
