"""Pieces of w = R^m and minimal zone tilings of w.

A subword of w^e (e = +1 or -1) is a *piece* if it has a second occurrence
that is inequivalent to the first. Two occurrences in the same word w^e are
equivalent when their starts agree modulo len(R); occurrences in w and in
w^-1 are never equivalent.

A zone tiling writes w cyclically as x_1 q_1 x_2 q_2 ... x_d q_d where every
q_i is a single letter (a junction) and every nonempty x_i is a piece. The
least such d is the word-level proxy for the number of zones at a vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from .classify import FormAM, FormAXBX, UP, OutOfScope, classify, is_exceptional
from .groups import Letter
from .position import Occurrence
from .words import FreeProduct, Word, WordError, cyclic_subword

C6_THRESHOLD = 6


class PieceQuery:
    """Piece oracle for w = R^m, with the piece table built on first use."""

    def __init__(self, fp: FreeProduct, r: Sequence[Letter], m: int):
        r = fp.check_cyclic(r)
        if m < 1:
            raise ValueError("exponent m must be positive")
        self.fp = fp
        self.r = r
        self.m = m
        self.n = len(r)
        self.N = self.n * m
        self.w: Word = r * m
        self.winv: Word = fp.invert(self.w)
        self._max_len = None  # {sign: [max piece length at start i, for i < n]}

    def word(self, sign: int) -> Word:
        return self.w if sign == 1 else self.winv

    def subword(self, sign: int, start: int, length: int) -> Word:
        return cyclic_subword(self.word(sign), start, length)

    def _occurrence_index(self, length: int) -> dict:
        """Map each length-L cyclic subword to its (sign, start) occurrences."""
        index: dict = {}
        for sign in (1, -1):
            w = self.word(sign)
            ww = w + w[: length - 1]
            for j in range(self.N):
                index.setdefault(ww[j : j + length], []).append((sign, j))
        return index

    def _is_piece_uncached(self, sign: int, start: int, length: int, index=None) -> bool:
        if index is None:
            index = self._occurrence_index(length)
        p = self.subword(sign, start, length)
        for s, j in index[p]:
            if s != sign or (j - start) % self.n:
                return True
        return False

    def _build(self):
        # piece-ness is prefix closed, so one maximal length per start suffices;
        # it also depends on start only modulo n since w is n-periodic
        table = {1: [0] * self.n, -1: [0] * self.n}
        open_ = {(s, i) for s in (1, -1) for i in range(self.n)}
        for length in range(1, self.N):
            if not open_:
                break
            index = self._occurrence_index(length)
            for s, i in sorted(open_):
                if self._is_piece_uncached(s, i, length, index):
                    table[s][i] = length
                else:
                    open_.discard((s, i))
        self._max_len = table

    def max_piece_length(self, sign: int, start: int) -> int:
        if self._max_len is None:
            self._build()
        return self._max_len[sign][start % self.n]

    def is_piece(self, sign: int, start: int, length: int) -> bool:
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if not 1 <= length <= self.N - 1:
            raise ValueError(f"piece length must lie in 1..{self.N - 1}, got {length}")
        return length <= self.max_piece_length(sign, start)

    def second_occurrence(self, sign: int, start: int, length: int) -> Optional[Occurrence]:
        """An occurrence witnessing that the subword at (sign, start) is a piece."""
        p = self.subword(sign, start, length)
        for s, j in self._occurrence_index(length)[p]:
            if s != sign or (j - start) % self.n:
                return Occurrence(s, j, length)
        return None

    def piece_intervals(self, sign: int = 1) -> list[dict]:
        """Run-length encoding of the piece table: starts grouped by their piece lengths."""
        runs = []
        for i in range(self.n):
            lengths = [L for L in range(1, self.N) if self.is_piece(sign, i, L)]
            ivs = []
            for L in lengths:
                if ivs and ivs[-1][1] == L - 1:
                    ivs[-1][1] = L
                else:
                    ivs.append([L, L])
            if runs and runs[-1]["lengths"] == ivs and runs[-1]["starts"][1] == i - 1:
                runs[-1]["starts"][1] = i
            else:
                runs.append({"starts": [i, i], "lengths": ivs})
        return runs


@dataclass(frozen=True)
class Segment:
    piece: Word
    junction: Letter


@dataclass(frozen=True)
class TilingResult:
    d_min: int
    offset: int  # position in w where the first segment starts
    witness: tuple  # tuple[Segment, ...]

    def concat(self) -> Word:
        out: list = []
        for seg in self.witness:
            out.extend(seg.piece)
            out.append(seg.junction)
        return tuple(out)


PiecePredicate = Callable[[int, int], bool]


def min_zone_tiling(
    q: PieceQuery, sign: int = 1, is_piece: Optional[PiecePredicate] = None
) -> TilingResult:
    """Least number of piece+junction segments covering w^sign cyclically.

    For each offset a shortest-path DP over cut positions is run; the first
    offset attaining the minimum is kept and its witness is rebuilt choosing
    the earliest optimal cut at every step. ``is_piece(start, length)`` may
    override the piece test, in which case all N offsets are tried.
    """
    w = q.word(sign)
    N = q.N
    if is_piece is None:
        offsets = range(q.n)  # w is n-periodic

        def is_piece(start, length):
            return length <= q.max_piece_length(sign, start)

    else:
        offsets = range(N)

    best = None
    for off in offsets:
        # allowed[k]: piece lengths usable by a segment starting at off + k
        allowed = [
            [0] + [L for L in range(1, N - k) if is_piece((off + k) % N, L)]
            for k in range(N)
        ]
        dist = [N + 1] * (N + 1)
        dist[N] = 0
        for k in range(N - 1, -1, -1):
            dist[k] = 1 + min(dist[k + L + 1] for L in allowed[k])
        if best is None or dist[0] < best[0]:
            best = (dist[0], off, dist, allowed)

    d_min, off, dist, allowed = best
    segments = []
    k = 0
    while k < N:
        L = next(L for L in allowed[k] if dist[k + L + 1] == dist[k] - 1)
        piece = tuple(w[(off + k + i) % N] for i in range(L))
        segments.append(Segment(piece, w[(off + k + L) % N]))
        k += L + 1
    return TilingResult(d_min, off, tuple(segments))


def validate_tiling(q: PieceQuery, t: TilingResult, sign: int = 1) -> bool:
    """Re-check a tiling witness: it spells w from its offset and every nonempty piece is a piece."""
    w = q.word(sign)
    if len(t.witness) != t.d_min:
        return False
    if t.concat() != cyclic_subword(w, t.offset, q.N):
        return False
    pos = t.offset
    for seg in t.witness:
        if seg.piece and not q._is_piece_uncached(sign, pos % q.N, len(seg.piece)):
            return False
        pos += len(seg.piece) + 1
    return True


@dataclass(frozen=True)
class CertifiedByTiling:
    d_min: int
    route = "tiling"


@dataclass(frozen=True)
class CertifiedByClassification:
    case: str
    d_min: int
    route = "classification"


@dataclass(frozen=True)
class NotCertified:
    witness: FormAXBX
    d_min: int
    route = "not_certified"


C6Status = Union[CertifiedByTiling, CertifiedByClassification, NotCertified]

CASE_UP = "uniquely-positioned decomposition"
CASE_INVOLUTIONS = "aXbX^-1 with a^2 = b^2 = 1"
CASE_NON_EXCEPTIONAL = "non-exceptional"


def c6_status(fp: FreeProduct, r: Sequence[Letter], m: int = 3) -> C6Status:
    """Certify C(6) for the relator R^m by tiling, else by the structure of R.

    Exceptional words (some rotation a X b X^-1 with a^2 = 1 != b^2) that the
    tiling does not certify are reported with their witness.
    """
    if m < 3:
        raise ValueError("c6_status needs m >= 3")
    r = fp.check_cyclic(r)
    c = classify(fp, r)
    if isinstance(c, OutOfScope):
        raise WordError(f"word has two-length {c.d2} > 2; outside the certified regime")
    q = PieceQuery(fp, r, m)
    d = min_zone_tiling(q).d_min
    if d >= C6_THRESHOLD:
        return CertifiedByTiling(d)
    exc, witness = is_exceptional(fp, r)
    if exc:
        return NotCertified(witness, d)
    if isinstance(c, UP):
        return CertifiedByClassification(CASE_UP, d)
    if isinstance(c, FormAXBX) and c.b_order2:
        return CertifiedByClassification(CASE_INVOLUTIONS, d)
    return CertifiedByClassification(CASE_NON_EXCEPTIONAL, d)
