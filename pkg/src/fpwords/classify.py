"""Two-length, marker decomposition and the structural classification of words."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .groups import Letter
from .position import UPDecomposition, find_up_decomposition, is_uniquely_positioned, iter_up_decompositions
from .words import FreeProduct, Word, WordError, rotate, rotations


class TheoremViolation(RuntimeError):
    """An in-scope word matched none of the structural forms."""

    def __init__(self, word, d2, message=None):
        self.word = word
        self.d2 = d2
        super().__init__(message or f"no structural form matched (d2={d2})")


@dataclass(frozen=True)
class TwoLengthReport:
    counts: dict = field(default_factory=dict)  # Letter -> D(a)

    @property
    def d2(self) -> int:
        return max(self.counts.values(), default=0)


@dataclass(frozen=True)
class MarkerDecomposition:
    marker: Letter
    rotation: int
    segments: tuple


@dataclass(frozen=True)
class FormAM:
    a: Letter
    m: Word
    rotation: int
    tag = "FormAM"


@dataclass(frozen=True)
class FormAXBX:
    a: Letter
    x: Word
    b: Letter
    b_order2: bool
    rotation: int
    tag = "FormAXBX"


@dataclass(frozen=True)
class UP:
    decomposition: UPDecomposition
    tag = "UP"


@dataclass(frozen=True)
class OutOfScope:
    d2: int
    tag = "OutOfScope"


Classification = Union[UP, FormAM, FormAXBX, OutOfScope]


@dataclass(frozen=True)
class LemmaWitness:
    """r' = a X x Y y X^-1, an element of the symmetrized closure."""

    inverted: bool
    rotation: int
    a: Letter
    x_word: Word
    x: Letter
    y_word: Word
    y: Letter


def two_length(fp: FreeProduct, r: Sequence[Letter]) -> TwoLengthReport:
    if len(r) < 2:
        raise WordError("two-length needs a word of length >= 2")
    counts: dict = {}
    for x in r:
        if fp.is_involution(x):
            counts[x] = counts.get(x, 0) + 1
    return TwoLengthReport(dict(sorted(counts.items())))


def marker_decomposition(fp: FreeProduct, r: Sequence[Letter], a: Letter) -> MarkerDecomposition:
    """Rotate r to begin at the first occurrence of ``a`` and cut at every ``a``."""
    r = tuple(r)
    if not fp.is_involution(a):
        raise WordError(f"marker {fp.name(a)} is not of order 2")
    if a not in r:
        raise WordError(f"marker {fp.name(a)} does not occur in the word")
    rot = r.index(a)
    w = rotate(r, rot)
    segments, cur = [], []
    for x in w[1:]:
        if x == a:
            segments.append(tuple(cur))
            cur = []
        else:
            cur.append(x)
    segments.append(tuple(cur))
    return MarkerDecomposition(a, rot, tuple(segments))


def match_form_am(fp: FreeProduct, r: Sequence[Letter]) -> Optional[FormAM]:
    """First rotation a.M with a an involution and M free of involutions."""
    for k, w in enumerate(rotations(r)):
        if fp.is_involution(w[0]) and not any(fp.is_involution(x) for x in w[1:]):
            return FormAM(w[0], w[1:], k)
    return None


def _match_axbx(fp: FreeProduct, w: Word):
    n = len(w)
    if n < 2 or n % 2:
        return None
    h = (n - 2) // 2
    a, x, b, tail = w[0], w[1 : h + 1], w[h + 1], w[h + 2 :]
    if fp.is_involution(a) and fp.invert(x) == tail:
        return a, x, b
    return None


def match_form_axbx(
    fp: FreeProduct, r: Sequence[Letter], *, b_order2: Optional[bool] = None
) -> Optional[FormAXBX]:
    """First rotation a.X.b.X^-1 with a an involution.

    The length of X is fixed by the length of r, so rotation order alone
    decides. ``b_order2`` restricts matches to b of order 2 (True) or of
    any other order (False).
    """
    for k, w in enumerate(rotations(r)):
        m = _match_axbx(fp, w)
        if m is None:
            continue
        a, x, b = m
        b2 = fp.is_involution(b)
        if b_order2 is not None and b2 != b_order2:
            continue
        return FormAXBX(a, x, b, b2, k)
    return None


def is_exceptional(fp: FreeProduct, r: Sequence[Letter]) -> tuple[bool, Optional[FormAXBX]]:
    """Whether some rotation of r is a.X.b.X^-1 with a of order 2 and b not."""
    m = match_form_axbx(fp, r, b_order2=False)
    return m is not None, m


def classify(fp: FreeProduct, r: Sequence[Letter]) -> Classification:
    """Classify r into UP, FormAM, FormAXBX or OutOfScope.

    Priority is UP, then FormAM, then FormAXBX. Which forms are admissible
    depends on the two-length: none for d2 = 0, FormAM or FormAXBX with an
    involutive b for d2 = 1, and FormAXBX (any b) for d2 = 2. An in-scope word
    matching nothing admissible raises :class:`TheoremViolation`.
    """
    r = fp.check_cyclic(r)
    d2 = two_length(fp, r).d2
    if d2 > 2:
        return OutOfScope(d2)
    dec = find_up_decomposition(fp, r)
    if dec is not None:
        return UP(dec)
    if d2 == 1:
        am = match_form_am(fp, r)
        if am is not None:
            return am
        axbx = match_form_axbx(fp, r, b_order2=True)
        if axbx is not None:
            return axbx
    elif d2 == 2:
        axbx = match_form_axbx(fp, r)
        if axbx is not None:
            return axbx
    raise TheoremViolation(r, d2, f"{fp.show(r)} (d2={d2}) has no UP decomposition and no admissible form")


def verify_classification(fp: FreeProduct, r: Sequence[Letter], c: Classification) -> bool:
    """Re-check a classification's witness against r from scratch."""
    r = tuple(r)
    if isinstance(c, OutOfScope):
        return two_length(fp, r).d2 == c.d2 and c.d2 > 2
    if isinstance(c, UP):
        d = c.decomposition
        w = rotate(r, d.rotation)
        return (
            d.u + d.v == w
            and len(d.u) > 0
            and len(d.v) > 0
            and is_uniquely_positioned(fp, w, d.u)
            and is_uniquely_positioned(fp, w, d.v)
        )
    w = rotate(r, c.rotation)
    if isinstance(c, FormAM):
        return (
            w == (c.a,) + c.m
            and fp.is_involution(c.a)
            and not any(fp.is_involution(x) for x in c.m)
        )
    if isinstance(c, FormAXBX):
        return (
            w == (c.a,) + c.x + (c.b,) + fp.invert(c.x)
            and fp.is_involution(c.a)
            and c.b_order2 == fp.is_involution(c.b)
        )
    return False


def lemma_up_criterion(fp: FreeProduct, r: Sequence[Letter]) -> tuple[bool, Optional[LemmaWitness]]:
    """Search the symmetrized closure of r for a X x Y y X^-1 with |Y| >= 1, x != y^-1, a^2 = 1.

    Only defined for words of two-length exactly 1. Words of length 2 never
    satisfy the criterion.
    """
    r = fp.check_cyclic(r)
    d2 = two_length(fp, r).d2
    if d2 != 1:
        raise WordError(f"lemma criterion needs two-length 1, got {d2}")
    n = len(r)
    if n <= 2:
        return False, None
    for inverted, base in ((False, r), (True, fp.invert(r))):
        for k, w in enumerate(rotations(base)):
            a = w[0]
            if not fp.is_involution(a):
                continue
            h = 0
            while n - 3 - 2 * h >= 1:
                xw = w[1 : 1 + h]
                if fp.invert(xw) == w[n - h :]:
                    x, y = w[1 + h], w[n - h - 1]
                    if x != fp.inv(y):
                        return True, LemmaWitness(inverted, k, a, xw, x, w[2 + h : n - h - 1], y)
                h += 1
    return False, None


def has_up_decomposition(fp: FreeProduct, r: Sequence[Letter]) -> bool:
    return next(iter_up_decompositions(fp, r), None) is not None
