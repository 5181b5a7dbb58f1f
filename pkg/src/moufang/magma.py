"""Finite groupoids given by explicit Cayley tables."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .errors import InvalidTableError, NotATranslationError
from .perm import Perm


@dataclass(frozen=True)
class CayleyTable:
    """``table[g][h]`` is the index of the product ``g*h``."""

    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", rows)
        n = len(rows)
        if n == 0:
            raise InvalidTableError("a table needs at least one element")
        for g, row in enumerate(rows):
            if len(row) != n:
                raise InvalidTableError(f"row {g} has length {len(row)}, expected {n}")
            for x in row:
                if not 0 <= x < n:
                    raise InvalidTableError(f"entry {x} in row {g} is outside 0..{n - 1}")

    @classmethod
    def from_array(cls, arr) -> CayleyTable:
        return cls(tuple(tuple(row) for row in np.asarray(arr).tolist()))

    @property
    def order(self) -> int:
        return len(self.table)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.table, dtype=np.intp)
        arr.setflags(write=False)
        return arr

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def __getitem__(self, g):
        return self.table[g]


@dataclass(frozen=True)
class CheckReport:
    """Outcome of checking one law; failures carry the lexicographically first witness."""

    law: str
    passed: bool
    witness: Optional[tuple] = None
    detail: str = ""

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError(f"failed report for {self.law!r} needs a witness")

    def __bool__(self):
        return self.passed

    def __str__(self):
        if self.passed:
            return f"{self.law}: ok"
        return f"{self.law}: FAILED at {self.witness}" + (f" ({self.detail})" if self.detail else "")


def passed(law: str, detail: str = "") -> CheckReport:
    return CheckReport(law, True, None, detail)


def failed(law: str, witness: Sequence, detail: str = "") -> CheckReport:
    return CheckReport(law, False, tuple(int(w) if isinstance(w, (int, np.integer)) else w
                                         for w in witness), detail)


def _first_repeat(values) -> Optional[int]:
    seen = set()
    for v in values:
        if v in seen:
            return v
        seen.add(v)
    return None


def left_translation(tbl: CayleyTable, g: int) -> Perm:
    """The permutation ``h -> g*h``."""
    row = tbl.table[g]
    dup = _first_repeat(row)
    if dup is not None:
        raise NotATranslationError("row", g, dup)
    return Perm(row)


def right_translation(tbl: CayleyTable, g: int) -> Perm:
    """The permutation ``h -> h*g``."""
    col = tuple(row[g] for row in tbl.table)
    dup = _first_repeat(col)
    if dup is not None:
        raise NotATranslationError("column", g, dup)
    return Perm(col)


def is_latin_square(tbl: CayleyTable) -> CheckReport:
    law = "latin square"
    for g, row in enumerate(tbl.table):
        dup = _first_repeat(row)
        if dup is not None:
            return failed(law, ("row", g, dup), f"value {dup} repeats in row {g}")
    for g in range(tbl.order):
        dup = _first_repeat(row[g] for row in tbl.table)
        if dup is not None:
            return failed(law, ("col", g, dup), f"value {dup} repeats in column {g}")
    return passed(law)


def find_unit(tbl: CayleyTable) -> Optional[int]:
    arr = tbl.array
    idx = np.arange(tbl.order)
    left = np.all(arr == idx[None, :], axis=1)
    right = np.all(arr == idx[:, None], axis=0)
    units = np.flatnonzero(left & right)
    if len(units) > 1:
        raise InvalidTableError(f"malformed table: several two-sided units {units.tolist()}")
    return int(units[0]) if len(units) else None
