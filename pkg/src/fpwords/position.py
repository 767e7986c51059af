"""Cyclic subword occurrences and uniquely positioned decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .groups import Letter
from .words import FreeProduct, Word, rotate


class Occurrences(NamedTuple):
    in_r: int
    in_rinv: int


@dataclass(frozen=True)
class Occurrence:
    sign: int
    start: int
    length: int


@dataclass(frozen=True)
class UPDecomposition:
    rotation: int
    split: int
    u: Word
    v: Word


def _count_cyclic(w: Word, p: Word) -> int:
    n, k = len(w), len(p)
    ww = w + w[: k - 1]
    return sum(1 for i in range(n) if ww[i : i + k] == p)


def count_occurrences(fp: FreeProduct, r: Sequence[Letter], p: Sequence[Letter]) -> Occurrences:
    """Number of cyclic start positions at which ``p`` occurs in ``r`` and in ``r^-1``."""
    r, p = tuple(r), tuple(p)
    if not p:
        raise ValueError("empty subword has no well-defined position")
    if len(p) > len(r) - 1:
        raise ValueError(f"subword of length {len(p)} is not a proper cyclic subword of a word of length {len(r)}")
    return Occurrences(_count_cyclic(r, p), _count_cyclic(fp.invert(r), p))


def is_uniquely_positioned(fp: FreeProduct, r: Sequence[Letter], p: Sequence[Letter]) -> bool:
    """True iff p occurs exactly once cyclically in r and never in r^-1."""
    return count_occurrences(fp, r, p) == (1, 0)


def iter_up_decompositions(fp: FreeProduct, r: Sequence[Letter]):
    r = tuple(r)
    n = len(r)
    rinv = fp.invert(r)
    # memo keyed by subword; each subword is checked at most once
    memo: dict[Word, bool] = {}

    def up(p):
        if p not in memo:
            memo[p] = _count_cyclic(r, p) == 1 and _count_cyclic(rinv, p) == 0
        return memo[p]

    for rot in range(n):
        w = rotate(r, rot)
        for split in range(1, n):
            u, v = w[:split], w[split:]
            if up(u) and up(v):
                yield UPDecomposition(rot, split, u, v)


def find_up_decomposition(fp: FreeProduct, r: Sequence[Letter]) -> Optional[UPDecomposition]:
    """First (rotation, split) pair splitting a rotation of r into two uniquely positioned parts.

    Raises a :class:`~fpwords.words.WordError` subclass for words that are too
    short, not cyclically reduced or proper powers.
    """
    r = fp.check_cyclic(r)
    return next(iter_up_decompositions(fp, r), None)
