"""Finite factor groups given by explicit multiplication tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import NamedTuple, Sequence

MAX_TABLE_SIZE = 64


class GroupError(ValueError):
    """Raised for malformed group descriptions or tables."""


class Letter(NamedTuple):
    """A nontrivial element of one free factor.

    Tuple ordering gives the canonical letter order (factor, then element index).
    """

    factor: int
    elem: int


@dataclass(frozen=True)
class GroupTable:
    """A finite group with identity fixed at index 0."""

    mult: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]
    kind: str = "table"
    inverses: tuple[int, ...] = field(init=False, repr=False, compare=False)
    orders: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _validate_table(self.mult, self.names)
        size = len(self.mult)
        inv = tuple(next(y for y in range(size) if self.mult[x][y] == 0) for x in range(size))
        orders = []
        for x in range(size):
            k, y = 1, x
            while y != 0:
                y = self.mult[y][x]
                k += 1
            orders.append(k)
        object.__setattr__(self, "inverses", inv)
        object.__setattr__(self, "orders", tuple(orders))
        for k in orders:
            if size % k:
                raise GroupError(f"element order {k} does not divide group order {size}")

    @property
    def size(self) -> int:
        return len(self.mult)

    @property
    def identity(self) -> int:
        return 0

    def mul(self, x: int, y: int) -> int:
        return self.mult[x][y]

    def inverse(self, x: int) -> int:
        return self.inverses[self._check(x)]

    def order(self, x: int) -> int:
        """Smallest k >= 1 with x**k equal to the identity."""
        return self.orders[self._check(x)]

    def involutions(self) -> list[int]:
        return [x for x in range(self.size) if self.orders[x] == 2]

    def _check(self, x: int) -> int:
        if not 0 <= x < self.size:
            raise IndexError(f"element index {x} out of range for group of order {self.size}")
        return x

    def to_spec(self) -> dict:
        return {"kind": "table", "mult": [list(row) for row in self.mult], "names": list(self.names)}


def _validate_table(mult: Sequence[Sequence[int]], names: Sequence[str]) -> None:
    n = len(mult)
    if n < 2:
        raise GroupError("factor groups must be nontrivial")
    if n > MAX_TABLE_SIZE:
        raise GroupError(f"table size {n} exceeds cap of {MAX_TABLE_SIZE}")
    if any(len(row) != n for row in mult):
        raise GroupError("multiplication table must be square")
    if any(not (isinstance(v, int) and 0 <= v < n) for row in mult for v in row):
        raise GroupError("table entries must be element indices")
    if len(names) != n:
        raise GroupError(f"expected {n} names, got {len(names)}")
    if len(set(names)) != n:
        raise GroupError("element names must be distinct")
    for x in range(n):
        if mult[0][x] != x or mult[x][0] != x:
            raise GroupError("element 0 must be the identity")
    for x in range(n):
        if not any(mult[x][y] == 0 and mult[y][x] == 0 for y in range(n)):
            raise GroupError(f"element {names[x]!r} has no two-sided inverse")
    for x, y, z in product(range(n), repeat=3):
        if mult[mult[x][y]][z] != mult[x][mult[y][z]]:
            raise GroupError(f"table is not associative at ({names[x]}, {names[y]}, {names[z]})")


def _power_name(sym: str, k: int) -> str:
    if k == 0:
        return "1"
    return sym if k == 1 else f"{sym}^{k}"


def cyclic(n: int, symbol: str = "g", names: Sequence[str] | None = None) -> GroupTable:
    if n < 2:
        raise GroupError("cyclic(n) needs n >= 2")
    mult = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    names = tuple(names) if names else tuple(_power_name(symbol, k) for k in range(n))
    return GroupTable(mult, names, kind=f"cyclic({n})")


def elementary_abelian_2(k: int, symbol: str = "b", names: Sequence[str] | None = None) -> GroupTable:
    """(Z_2)^k with element i the bitmask i; non-identity names b1, b2, ..."""
    if k < 1:
        raise GroupError("elementary-abelian-2(k) needs k >= 1")
    n = 2**k
    if n > MAX_TABLE_SIZE:
        raise GroupError(f"table size {n} exceeds cap of {MAX_TABLE_SIZE}")
    mult = tuple(tuple(i ^ j for j in range(n)) for i in range(n))
    names = tuple(names) if names else ("1",) + tuple(f"{symbol}{i}" for i in range(1, n))
    return GroupTable(mult, names, kind=f"elementary-abelian-2({k})")


def dihedral(n: int, names: Sequence[str] | None = None) -> GroupTable:
    """Dihedral group of order 2n; index i + n*j stands for r^i s^j."""
    if n < 3:
        raise GroupError("dihedral(n) needs n >= 3")
    size = 2 * n

    def mul(x, y):
        i, j = x % n, x // n
        k, l = y % n, y // n
        return (i + (k if j == 0 else -k)) % n + n * ((j + l) % 2)

    mult = tuple(tuple(mul(x, y) for y in range(size)) for x in range(size))
    if not names:
        rot = [_power_name("r", i) for i in range(n)]
        ref = ["s"] + [f"{_power_name('r', i)}s" for i in range(1, n)]
        names = rot + ref
    return GroupTable(mult, tuple(names), kind=f"dihedral({n})")


def from_table(mult: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> GroupTable:
    mult = tuple(tuple(row) for row in mult)
    if names is None:
        names = ["1"] + [f"e{i}" for i in range(1, len(mult))]
    return GroupTable(mult, tuple(names))


def build_group(spec: dict) -> GroupTable:
    """Build a group from a JSON-style spec such as ``{"kind": "cyclic", "n": 6}``.

    Recognised kinds: ``cyclic`` (n), ``elementary-abelian-2`` (k),
    ``dihedral`` (n) and ``table`` (mult, optional names). ``symbol`` sets the
    display prefix for cyclic and elementary abelian groups and ``names``
    overrides all display names.
    """
    if not isinstance(spec, dict) or "kind" not in spec:
        raise GroupError(f"group spec must be an object with a 'kind': {spec!r}")
    kind = spec["kind"]
    names = spec.get("names")
    try:
        if kind == "cyclic":
            return cyclic(int(spec["n"]), spec.get("symbol", "g"), names)
        if kind in ("elementary-abelian-2", "elementary_abelian_2"):
            return elementary_abelian_2(int(spec["k"]), spec.get("symbol", "b"), names)
        if kind == "dihedral":
            return dihedral(int(spec["n"]), names)
        if kind == "table":
            return from_table(spec["mult"], names)
    except KeyError as e:
        raise GroupError(f"group spec {kind!r} is missing field {e}") from None
    raise GroupError(f"unknown group kind {kind!r}")
