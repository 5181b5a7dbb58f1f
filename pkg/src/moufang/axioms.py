"""Exhaustive law checkers for Cayley tables and the classification ladder.

Every checker scans all tuples; on failure the witness is the
lexicographically first falsifying tuple.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import MissingInverseError, NotALoopError
from .magma import CayleyTable, CheckReport, failed, find_unit, is_latin_square, passed


def _first(mask: np.ndarray) -> Optional[tuple[int, ...]]:
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(i) for i in hits[0])


def check_quasigroup(tbl: CayleyTable) -> CheckReport:
    rep = is_latin_square(tbl)
    if rep.passed:
        return passed("quasigroup")
    return failed("quasigroup", rep.witness, rep.detail)


def check_loop(tbl: CayleyTable) -> CheckReport:
    q = check_quasigroup(tbl)
    if not q.passed:
        return failed("loop", q.witness, q.detail)
    e = find_unit(tbl)
    if e is None:
        # every candidate fails; report where candidate 0 does
        arr = tbl.array
        idx = np.arange(tbl.order)
        h = _first((arr[0] != idx) | (arr[:, 0] != idx))[0]
        return failed("loop", (0, h), "no two-sided unit; element 0 fails at this element")
    return passed("loop", f"unit {e}")


def _require_loop(tbl: CayleyTable) -> int:
    rep = check_loop(tbl)
    if not rep.passed:
        raise NotALoopError(f"table is not a loop: {rep}")
    return find_unit(tbl)


def inverse_map(tbl: CayleyTable) -> list[int]:
    """Two-sided inverses in a table with a unit; raises MissingInverseError."""
    e = find_unit(tbl)
    if e is None:
        raise MissingInverseError(0)
    arr = tbl.array
    both = (arr == e) & (arr.T == e)
    inv = []
    for g in range(tbl.order):
        xs = np.flatnonzero(both[g])
        if len(xs) == 0:
            raise MissingInverseError(g)
        inv.append(int(xs[0]))
    return inv


def check_associative(tbl: CayleyTable) -> CheckReport:
    law = "associativity"
    arr = tbl.array
    for g in range(tbl.order):
        lhs = arr[arr[g], :]          # (g h) k
        rhs = arr[g][arr]             # g (h k)
        w = _first(lhs != rhs)
        if w is not None:
            h, k = w
            return failed(law, (g, h, k), f"({g}*{h})*{k}={lhs[h, k]} but {g}*({h}*{k})={rhs[h, k]}")
    return passed(law)


def check_flexible(tbl: CayleyTable) -> CheckReport:
    law = "flexibility"
    arr = tbl.array
    g = np.arange(tbl.order)[:, None]
    lhs = arr[arr, g]                 # (g h) g
    rhs = arr[g, arr.T]               # g (h g)
    w = _first(lhs != rhs)
    if w is not None:
        return failed(law, w, f"(gh)g={lhs[w]} but g(hg)={rhs[w]}")
    return passed(law)


def check_moufang(tbl: CayleyTable) -> CheckReport:
    """(gh)(kg) against both (g(hk))g and g((hk)g)."""
    _require_loop(tbl)
    law = "Moufang identity"
    arr = tbl.array
    for g in range(tbl.order):
        lhs = arr[arr[g][:, None], arr[:, g][None, :]]
        ghk = arr[g][arr]
        r1 = arr[ghk, g]
        r2 = arr[g][arr[arr, g]]
        w = _first((lhs != r1) | (lhs != r2))
        if w is not None:
            h, k = w
            return failed(
                law, (g, h, k),
                f"(gh)(kg)={lhs[h, k]}, (g(hk))g={r1[h, k]}, g((hk)g)={r2[h, k]}",
            )
    return passed(law)


def check_inverse_property(tbl: CayleyTable) -> CheckReport:
    _require_loop(tbl)
    law = "inverse property"
    try:
        inv = np.array(inverse_map(tbl))
    except MissingInverseError as exc:
        return failed(law, (exc.element,), "no two-sided inverse")
    arr = tbl.array
    hs = np.arange(tbl.order)[None, :]
    left = arr[inv[:, None], arr]            # g^-1 (g h)
    right = arr[arr.T, inv[:, None]]         # (h g) g^-1
    bad = (left != hs) | (right != hs)
    w = _first(bad)
    if w is not None:
        g, h = w
        return failed(law, w, f"g^-1(gh)={left[g, h]}, (hg)g^-1={right[g, h]}, expected {h}")
    return passed(law)


def check_antiautomorphism(tbl: CayleyTable) -> CheckReport:
    """(gh)^-1 == h^-1 g^-1 for all g, h."""
    law = "inverse antiautomorphism"
    inv = np.array(inverse_map(tbl))
    arr = tbl.array
    lhs = inv[arr]
    rhs = arr[inv[None, :], inv[:, None]]
    w = _first(lhs != rhs)
    if w is not None:
        return failed(law, w, f"(gh)^-1={lhs[w]} but h^-1 g^-1={rhs[w]}")
    return passed(law)


class Rung(enum.IntEnum):
    GROUPOID = 0
    QUASIGROUP = 1
    LOOP = 2
    IP_LOOP = 3
    MOUFANG_LOOP = 4
    GROUP = 5

    @property
    def label(self) -> str:
        return self.name.lower().replace("_", " ").replace("ip ", "IP-").replace("moufang", "Moufang")


@dataclass
class LadderReport:
    rung: Rung
    stopped_by: Optional[CheckReport]
    reports: list[CheckReport] = field(default_factory=list)

    def describe(self) -> str:
        if self.rung == Rung.MOUFANG_LOOP:
            return "Moufang loop (non-associative)"
        return self.rung.label


def classify(tbl: CayleyTable) -> LadderReport:
    """Climb groupoid -> quasigroup -> loop -> IP-loop -> Moufang loop -> group."""
    steps = [
        (Rung.QUASIGROUP, check_quasigroup),
        (Rung.LOOP, check_loop),
        (Rung.IP_LOOP, check_inverse_property),
        (Rung.MOUFANG_LOOP, check_moufang),
        (Rung.GROUP, check_associative),
    ]
    reached = Rung.GROUPOID
    reports = []
    for rung, check in steps:
        rep = check(tbl)
        reports.append(rep)
        if not rep.passed:
            return LadderReport(reached, rep, reports)
        reached = rung
    return LadderReport(reached, None, reports)
