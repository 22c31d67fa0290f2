"""Finite groups with dense integer elements.

Every group is stored as a full Cayley table over the indices ``0..order-1``
so that the search kernels can do arithmetic with array lookups.  Cyclic
products ``Z_n1 x Z_n2 x ...`` use a mixed-radix encoding in which the first
factor is the most significant digit.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

import numpy as np


class GroupSpecError(ValueError):
    """Raised when a group spec is malformed or a table is not a group."""


class ElementError(IndexError):
    """Raised when an element index does not belong to the group."""


@dataclass(frozen=True, eq=False)
class Group:
    name: str
    table: np.ndarray = field(repr=False)
    identity: int
    moduli: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        self.table.setflags(write=False)
        inv = np.empty(self.order, dtype=np.int64)
        for a in range(self.order):
            inv[a] = int(np.flatnonzero(self.table[a] == self.identity)[0])
        inv.setflags(write=False)
        object.__setattr__(self, "inv", inv)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    @property
    def is_cyclic_product(self) -> bool:
        return self.moduli is not None

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.order})"

    def _check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ElementError(f"element {a} not in {self.name} (order {self.order})")
        return int(a)

    def op(self, a: int, b: int) -> int:
        return int(self.table[self._check(a), self._check(b)])

    def inverse(self, a: int) -> int:
        return int(self.inv[self._check(a)])

    def zero(self) -> int:
        return self.identity

    def sub(self, a: int, b: int) -> int:
        """``a - b`` in additive notation, i.e. ``op(a, inverse(b))``."""
        return self.op(a, self.inverse(b))

    def enumerate(self) -> list[int]:
        return list(range(self.order))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def element(self, coords: Sequence[int]) -> int:
        """Index of the cyclic-product element with the given coordinates."""
        if self.moduli is None:
            raise GroupSpecError(f"{self.name} is not a cyclic product")
        if len(coords) != len(self.moduli):
            raise ElementError(f"expected {len(self.moduli)} coordinates")
        for c, m in zip(coords, self.moduli):
            if not 0 <= c < m:
                raise ElementError(f"coordinate {c} out of range for Z{m}")
        return int(np.ravel_multi_index(tuple(coords), self.moduli))

    def coords(self, a: int) -> tuple[int, ...]:
        if self.moduli is None:
            raise GroupSpecError(f"{self.name} is not a cyclic product")
        return tuple(int(x) for x in np.unravel_index(self._check(a), self.moduli))

    def to_json(self) -> dict:
        return {"order": self.order, "table": self.table.tolist()}


def cyclic_product(moduli: Sequence[int]) -> Group:
    moduli = tuple(int(m) for m in moduli)
    if not moduli or any(m < 2 for m in moduli):
        raise GroupSpecError(f"moduli must be >= 2, got {moduli}")
    order = int(np.prod(moduli))
    digits = np.array(np.unravel_index(np.arange(order), moduli))  # (k, order)
    summed = (digits[:, :, None] + digits[:, None, :]) % np.array(moduli)[:, None, None]
    table = np.ravel_multi_index(tuple(summed), moduli).astype(np.int64)
    name = "x".join(f"Z{m}" for m in moduli)
    return Group(name, table, 0, moduli)


def validate_table(table: Sequence[Sequence[int]]) -> int:
    """Check the group axioms exhaustively and return the identity index."""
    t = np.asarray(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] < 1:
        raise GroupSpecError("table must be a non-empty square matrix")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise GroupSpecError("table is not closed")
    ar = np.arange(n)
    ids = [e for e in range(n) if np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar)]
    if not ids:
        raise GroupSpecError("table has no two-sided identity")
    e = ids[0]
    for a in range(n):
        if not np.any((t[a] == e) & (t[:, a] == e)):
            raise GroupSpecError(f"element {a} has no inverse")
    left = t[t[:, :, None], ar[None, None, :]]  # (ab)c indexed [a, b, c]
    right = t[ar[:, None, None], t[None, :, :]]  # a(bc)
    if not np.array_equal(left, right):
        raise GroupSpecError("table is not associative")
    return e


def from_table(table: Sequence[Sequence[int]], name: str = "table") -> Group:
    e = validate_table(table)
    return Group(name, np.asarray(table, dtype=np.int64).copy(), e)


def symmetric_group(n: int = 3) -> Group:
    """S_n on permutations of ``range(n)`` in lexicographic order; identity is 0."""
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    return from_table(table, name=f"S{n}")


def make_group(spec: "str | dict | Group | os.PathLike") -> Group:
    """Build a group from ``"Z3"``, ``"Z2xZ4"``, ``"S3"``, a table dict, or a JSON path."""
    if isinstance(spec, Group):
        return spec
    if isinstance(spec, dict):
        if "table" not in spec:
            raise GroupSpecError("table spec needs a 'table' field")
        g = from_table(spec["table"], name=spec.get("name", "table"))
        if "order" in spec and int(spec["order"]) != g.order:
            raise GroupSpecError(f"declared order {spec['order']} != table side {g.order}")
        return g
    s = os.fspath(spec).strip()
    if s.lower().endswith(".json") or os.path.isfile(s):
        return load_group_table(s)
    if re.fullmatch(r"S(\d+)", s):
        n = int(s[1:])
        if not 1 <= n <= 4:
            raise GroupSpecError("only S1..S4 are built in")
        return symmetric_group(n)
    parts = s.split("x")
    if not parts or not all(re.fullmatch(r"Z\d+", p) for p in parts):
        raise GroupSpecError(f"unrecognised group spec {spec!r}")
    return cyclic_product([int(p[1:]) for p in parts])


def load_group_table(path: "str | os.PathLike") -> Group:
    with open(path) as fh:
        data = json.load(fh)
    data.setdefault("name", os.path.splitext(os.path.basename(os.fspath(path)))[0])
    return make_group(data)


def default_groups() -> list[Group]:
    """Small-group catalog used by the suite: cyclic groups, Klein, and S3."""
    return [make_group(s) for s in ("Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "Z2xZ3", "S3", "Z7")]
