"""Brute-force reference implementations, deliberately naive and index based."""

import random
from itertools import combinations

from fpwords.words import FreeProduct


def naive_invert(fp, w):
    out = []
    for i in range(len(w) - 1, -1, -1):
        g = fp.group(w[i].factor)
        inv = next(y for y in range(g.size) if g.mult[w[i].elem][y] == 0)
        out.append(type(w[i])(w[i].factor, inv))
    return tuple(out)


def naive_count(r, p):
    n = len(r)
    total = 0
    for i in range(n):
        ok = True
        for k in range(len(p)):
            if r[(i + k) % n] != p[k]:
                ok = False
                break
        if ok:
            total += 1
    return total


def naive_occurrences(fp, r, p):
    return naive_count(r, p), naive_count(naive_invert(fp, r), p)


def naive_proper_power(w):
    """True iff some nontrivial even rotation of w reproduces w."""
    n = len(w)
    for k in range(2, n, 2):
        if all(w[i] == w[(i + k) % n] for i in range(n)):
            return True
    return False


def naive_orbit(fp, w):
    n = len(w)
    out = set()
    for base in (w, naive_invert(fp, w)):
        for k in range(n):
            out.add(tuple(base[(k + i) % n] for i in range(n)))
    return out


def naive_d2(fp, w):
    best = 0
    for x in set(w):
        g = fp.group(x.factor)
        if g.mult[x.elem][x.elem] == 0:
            best = max(best, sum(1 for y in w if y == x))
    return best


def naive_up_exists(fp, r):
    n = len(r)
    for rot in range(n):
        w = tuple(r[(rot + i) % n] for i in range(n))
        for s in range(1, n):
            if naive_occurrences(fp, r, w[:s]) == (1, 0) and naive_occurrences(fp, r, w[s:]) == (1, 0):
                return True
    return False


def naive_is_piece(fp, r, m, sign, start, length):
    n = len(r)
    N = n * m
    w = tuple(r[i % n] for i in range(N))
    winv = naive_invert(fp, w)
    words = {1: w, -1: winv}
    src = words[sign]
    p = [src[(start + k) % N] for k in range(length)]
    for s in (1, -1):
        tgt = words[s]
        for j in range(N):
            if s == sign and (j - start) % n == 0:
                continue
            if all(tgt[(j + k) % N] == p[k] for k in range(length)):
                return True
    return False


def brute_force_tiling(N, piece):
    """Least number of junctions over all junction sets; ``piece(start, length)``."""
    for d in range(1, N + 1):
        for junctions in combinations(range(N), d):
            ok = True
            for i, j in enumerate(junctions):
                prev = junctions[i - 1]
                start = (prev + 1) % N
                length = (j - prev - 1) % N if d > 1 else N - 1
                if length and not piece(start, length):
                    ok = False
                    break
            if ok:
                return d
    raise AssertionError("all-junction tiling must exist")


def random_cyclic_word(fp: FreeProduct, rng: random.Random, half_lengths=(1, 6)):
    half = rng.randint(*half_lengths)
    first = rng.choice((1, 2))
    second = 3 - first
    out = []
    for _ in range(half):
        out.append(rng.choice(fp.letters(first)))
        out.append(rng.choice(fp.letters(second)))
    return tuple(out)
