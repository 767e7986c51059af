"""Word arithmetic in a free product of two finite groups.

Words are plain tuples of :class:`Letter`. A cyclic word is a reduced word of
even length whose first and last letters lie in different factors; it is
treated up to rotation by the functions that care about that.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .groups import GroupTable, Letter

Word = tuple  # tuple[Letter, ...]


class WordError(ValueError):
    """Raised when a word fails a precondition of an analysis entry point."""


class ShortWordError(WordError):
    pass


class NotCyclicallyReducedError(WordError):
    pass


class ProperPowerError(WordError):
    def __init__(self, root, exponent, message=None):
        self.root = root
        self.exponent = exponent
        super().__init__(message or f"word is a proper power (exponent {exponent})")


@dataclass(frozen=True, order=True)
class SymClassRep:
    rep: Word
    orbit_size: int


class FreeProduct:
    """The free product G1 * G2 of two finite groups."""

    def __init__(self, g1: GroupTable, g2: GroupTable):
        self.factors = (g1, g2)
        self._by_name = {}
        for f, g in ((1, g1), (2, g2)):
            for x in range(1, g.size):
                name = g.names[x]
                if name in self._by_name:
                    raise WordError(f"letter name {name!r} is used in both factors")
                self._by_name[name] = Letter(f, x)

    @property
    def g1(self) -> GroupTable:
        return self.factors[0]

    @property
    def g2(self) -> GroupTable:
        return self.factors[1]

    def group(self, factor: int) -> GroupTable:
        return self.factors[factor - 1]

    def letters(self, factor: int | None = None) -> list[Letter]:
        fs = (1, 2) if factor is None else (factor,)
        return [Letter(f, x) for f in fs for x in range(1, self.group(f).size)]

    # letter level

    def inv(self, x: Letter) -> Letter:
        return Letter(x.factor, self.group(x.factor).inverses[x.elem])

    def order(self, x: Letter) -> int:
        return self.group(x.factor).orders[x.elem]

    def is_involution(self, x: Letter) -> bool:
        return self.group(x.factor).orders[x.elem] == 2

    def name(self, x: Letter) -> str:
        return self.group(x.factor).names[x.elem]

    def letter(self, name: str) -> Letter:
        try:
            return self._by_name[name]
        except KeyError:
            raise WordError(f"unknown letter name {name!r}") from None

    # word level

    def parse(self, names: Iterable[str]) -> Word:
        """Resolve names and reduce; identity names ("1") are dropped."""
        seq = []
        for n in names:
            if n == "1":
                continue
            seq.append(self.letter(n))
        return self.reduce(seq)

    def format(self, w: Sequence[Letter]) -> list[str]:
        return [self.name(x) for x in w]

    def show(self, w: Sequence[Letter]) -> str:
        return " ".join(self.format(w)) if w else "1"

    def reduce(self, seq: Iterable[tuple[int, int]]) -> Word:
        """Normal form of a sequence of (factor, element) pairs.

        Identity entries vanish and adjacent entries of one factor are
        multiplied, repeatedly, using a stack.
        """
        out: list[Letter] = []
        for f, x in seq:
            g = self.group(f)
            if not 0 <= x < g.size:
                raise IndexError(f"element index {x} out of range in factor {f}")
            if x == 0:
                continue
            if out and out[-1].factor == f:
                y = g.mult[out[-1].elem][x]
                out.pop()
                if y != 0:
                    out.append(Letter(f, y))
            else:
                out.append(Letter(f, x))
        return tuple(out)

    def invert(self, w: Sequence[Letter]) -> Word:
        return tuple(self.inv(x) for x in reversed(w))

    def cyclically_reduce(self, w: Sequence[Letter]) -> tuple[Word, Word]:
        """Return ``(u, c)`` with ``w = c u c^-1`` and ``u`` cyclically reduced or of length <= 1."""
        w = list(self.reduce(w))
        conj: list[Letter] = []
        while len(w) >= 2 and w[0].factor == w[-1].factor:
            first, last = w[0], w[-1]
            g = self.group(first.factor)
            y = g.mult[last.elem][first.elem]
            if y == 0:
                conj.append(first)
                w = w[1:-1]
            else:
                # w = first M last = first (M last first) first^-1
                conj.append(first)
                w = w[1:-1] + [Letter(first.factor, y)]
                break
        return tuple(w), tuple(conj)

    def is_cyclically_reduced(self, w: Sequence[Letter]) -> bool:
        if len(w) < 2 or len(w) % 2:
            return False
        return all(w[i].factor != w[i - 1].factor for i in range(len(w)))

    def check_cyclic(self, w: Sequence[Letter], *, allow_power: bool = False) -> Word:
        """Gate for analysis entry points: length >= 2, cyclically reduced, not a proper power."""
        w = tuple(w)
        if len(w) < 2:
            raise ShortWordError(f"word of length {len(w)}; analysis needs length >= 2")
        if not self.is_cyclically_reduced(w):
            raise NotCyclicallyReducedError(f"{self.show(w)} is not cyclically reduced")
        if not allow_power:
            power, root, k = is_proper_power(w)
            if power:
                raise ProperPowerError(root, k, f"{self.show(w)} is a proper power: ({self.show(root)})^{k}")
        return w

    def sym_closure(self, w: Sequence[Letter]) -> set[Word]:
        """All rotations of w and of its inverse."""
        w = tuple(w)
        wi = self.invert(w)
        return set(rotations(w)) | set(rotations(wi))

    def sym_closure_rep(self, w: Sequence[Letter]) -> SymClassRep:
        orbit = self.sym_closure(w)
        return SymClassRep(min(orbit), len(orbit))


def rotate(w: Sequence[Letter], k: int) -> Word:
    n = len(w)
    if n == 0:
        return ()
    k %= n
    return tuple(w[k:]) + tuple(w[:k])


def rotations(w: Sequence[Letter]) -> list[Word]:
    return [rotate(w, k) for k in range(len(w))]


def cyclic_subword(w: Sequence[Letter], start: int, length: int) -> Word:
    n = len(w)
    return tuple(w[(start + i) % n] for i in range(length))


def is_proper_power(w: Sequence[Letter]) -> tuple[bool, Word, int]:
    """Detect ``w = Q^k`` with k >= 2.

    Returns ``(True, Q, k)`` for the shortest root, otherwise ``(False, w, 1)``.
    Only even periods are tried since a root of a cyclic word is cyclic.
    """
    w = tuple(w)
    n = len(w)
    for d in range(2, n, 2):
        if n % d == 0 and w[d:] + w[:d] == w:
            return True, w[:d], n // d
    return False, w, 1
