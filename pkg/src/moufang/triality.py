"""Translation triples (S, T, P) and reconstruction of a loop from them.

A triple assigns to every element g of an n-element groupoid three
permutations S_g, T_g, P_g of degree m.  For a Moufang loop the canonical
choice is S_g = left translation, T_g = right translation and
P_g = (S_g T_g)^-1; then

    S_g T_g P_g = E
    S_{g^-1 h} = P_g S_h T_g,   T_{g^-1 h} = S_g T_h P_g,   P_{g^-1 h} = T_g P_h S_g
    S_{h g^-1} = T_g S_h P_g,   T_{h g^-1} = P_g T_h S_g,   P_{h g^-1} = S_g P_h T_g

and (S_g, T_g) determines g.  Conversely any triple with these properties
(where g^-1 is read as the element whose S and T are inverse to those of g)
fixes the multiplication, and the result is a Moufang loop.  This module
checks all of that exhaustively.

Permutation products apply the right factor first.  Internally the three
maps are stacked as integer arrays of shape (n, m) so that a product of
permutations is ``np.take_along_axis``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Literal, Optional, Sequence

import numpy as np

from . import axioms
from .errors import (
    BarMissingError,
    CertificateError,
    CertificateInconsistentError,
    ExtractionRefusedError,
    FlexibilityError,
    HypothesisViolation,
    IncompatibleDegreeError,
    NotALoopError,
    ReconstructionError,
    SeparationError,
)
from .magma import CayleyTable, CheckReport, failed, left_translation, passed, right_translation
from .perm import Perm, compose, identity, inverse


@dataclass(frozen=True)
class TranslationTriple:
    S: tuple[Perm, ...]
    T: tuple[Perm, ...]
    P: tuple[Perm, ...]

    def __post_init__(self):
        for name in "STP":
            object.__setattr__(self, name, tuple(getattr(self, name)))
        n = len(self.S)
        if n == 0 or len(self.T) != n or len(self.P) != n:
            raise IncompatibleDegreeError(
                f"S, T, P must have the same positive length, got {len(self.S)}, {len(self.T)}, {len(self.P)}"
            )
        m = self.S[0].degree
        for name in "STP":
            for g, p in enumerate(getattr(self, name)):
                if p.degree != m:
                    raise IncompatibleDegreeError(f"{name}_{g} has degree {p.degree}, expected {m}")

    @property
    def n(self) -> int:
        return len(self.S)

    @property
    def m(self) -> int:
        return self.S[0].degree

    @cached_property
    def stacks(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return tuple(np.array([p.images for p in getattr(self, name)], dtype=np.intp)
                     for name in "STP")

    @cached_property
    def _st_index(self) -> dict:
        index: dict = {}
        for g, (s, t) in enumerate(zip(self.S, self.T)):
            index.setdefault((s.images, t.images), []).append(g)
        return index

    def lookup(self, s_images, t_images) -> list[int]:
        """All elements k with S_k, T_k equal to the given image tuples."""
        return list(self._st_index.get((tuple(s_images), tuple(t_images)), ()))

    def replace(self, letter: str, g: int, perm: Perm) -> TranslationTriple:
        maps = {name: list(getattr(self, name)) for name in "STP"}
        maps[letter][g] = perm
        return TranslationTriple(**maps)


@dataclass(frozen=True)
class BarMap:
    bar: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bar", tuple(int(b) for b in self.bar))

    def __getitem__(self, g):
        return self.bar[g]

    def __len__(self):
        return len(self.bar)

    def is_involution(self) -> bool:
        return all(self.bar[b] == g for g, b in enumerate(self.bar))


@dataclass
class HypothesisReport:
    h1: CheckReport
    h2: CheckReport
    h3: list[CheckReport]
    h4: CheckReport

    @property
    def overall(self) -> bool:
        return all(r.passed for r in self.reports())

    def reports(self) -> list[CheckReport]:
        return [self.h1, self.h2, *self.h3, self.h4]

    def first_failure(self) -> Optional[CheckReport]:
        return next((r for r in self.reports() if not r.passed), None)


@dataclass
class MoufangCertificate:
    unit: int
    inverse: tuple[int, ...]
    reports: list[CheckReport] = field(default_factory=list)


# -- array helpers -----------------------------------------------------------

def _chain(*factors: np.ndarray) -> np.ndarray:
    """Batched product of permutation arrays; the last factor acts first."""
    factors = np.broadcast_arrays(*factors)
    out = factors[-1]
    for a in reversed(factors[:-1]):
        out = np.take_along_axis(a, out, axis=-1)
    return out


def _invert(a: np.ndarray) -> np.ndarray:
    return np.argsort(a, axis=-1)


def _first_mismatch(lhs: np.ndarray, rhs: np.ndarray) -> Optional[tuple[int, ...]]:
    bad = np.any(lhs != rhs, axis=-1)
    hits = np.argwhere(bad)
    return tuple(int(i) for i in hits[0]) if len(hits) else None


def _perm_report_all(law: str, *pairs) -> CheckReport:
    bad = np.zeros(pairs[0][0].shape[:-1], dtype=bool)
    for lhs, rhs in pairs:
        bad |= np.any(lhs != rhs, axis=-1)
    hits = np.argwhere(bad)
    return passed(law) if len(hits) == 0 else failed(law, tuple(int(i) for i in hits[0]))


def _perm_report(law: str, lhs, rhs, detail: str = "") -> CheckReport:
    w = _first_mismatch(lhs, rhs)
    return passed(law) if w is None else failed(law, w, detail)


# -- triples from tables -----------------------------------------------------

def translation_triple(tbl: CayleyTable) -> TranslationTriple:
    """(left translation, right translation, (S T)^-1) for any quasigroup table.

    No Moufang precondition; use :func:`extract_triple` for the checked version.
    """
    S = [left_translation(tbl, g) for g in range(tbl.order)]
    T = [right_translation(tbl, g) for g in range(tbl.order)]
    P = [inverse(compose(s, t)) for s, t in zip(S, T)]
    return TranslationTriple(S, T, P)


def extract_triple(tbl: CayleyTable) -> TranslationTriple:
    try:
        rep = axioms.check_moufang(tbl)
    except NotALoopError:
        rep = axioms.check_loop(tbl)
    if not rep.passed:
        raise ExtractionRefusedError(rep)
    return translation_triple(tbl)


# -- hypotheses ---------------------------------------------------------------

def _bar_candidates(triple: TranslationTriple) -> list[list[int]]:
    S, T, _ = triple.stacks
    S_inv, T_inv = _invert(S), _invert(T)
    return [triple.lookup(S_inv[g], T_inv[g]) for g in range(triple.n)]


def derive_bar(triple: TranslationTriple) -> BarMap:
    """For each g the unique h with S_h = S_g^-1 and T_h = T_g^-1."""
    bar = []
    for g, cands in enumerate(_bar_candidates(triple)):
        if not cands:
            raise BarMissingError(g)
        if len(cands) > 1:
            raise SeparationError(cands[0], cands[1])
        bar.append(cands[0])
    return BarMap(bar)


def _check_h1(triple: TranslationTriple) -> CheckReport:
    S, T, P = triple.stacks
    ident = np.arange(triple.m)
    return _perm_report("H1: S_g T_g P_g = E", _chain(S, T, P), ident[None, :])


def _check_h4(triple: TranslationTriple) -> CheckReport:
    law = "H4: (S_g, T_g) determines g"
    collisions = [ks for ks in triple._st_index.values() if len(ks) > 1]
    if not collisions:
        return passed(law)
    g, h = min(ks[:2] for ks in collisions)
    return failed(law, (g, h), f"S_{g} = S_{h} and T_{g} = T_{h}")


RELATION_NAMES = (
    "H3: S_{bar g * h} = P_g S_h T_g",
    "H3: T_{bar g * h} = S_g T_h P_g",
    "H3: P_{bar g * h} = T_g P_h S_g",
    "H3: S_{h * bar g} = T_g S_h P_g",
    "H3: T_{h * bar g} = P_g T_h S_g",
    "H3: P_{h * bar g} = S_g P_h T_g",
)


def _check_h3(triple: TranslationTriple, tbl: CayleyTable,
              bar: Sequence[Optional[int]]) -> list[CheckReport]:
    S, T, P = triple.stacks
    arr = tbl.array
    n = triple.n
    missing = [g for g in range(n) if bar[g] is None]
    barr = np.array([0 if b is None else b for b in bar])
    left = arr[barr[:, None], np.arange(n)[None, :]]      # [g, h] -> bar g * h
    right = arr[np.arange(n)[None, :], barr[:, None]]     # [g, h] -> h * bar g
    g_ = (slice(None), None)
    h_ = (None, slice(None))
    sides = [
        (S[left], (P[g_], S[h_], T[g_])),
        (T[left], (S[g_], T[h_], P[g_])),
        (P[left], (T[g_], P[h_], S[g_])),
        (S[right], (T[g_], S[h_], P[g_])),
        (T[right], (P[g_], T[h_], S[g_])),
        (P[right], (S[g_], P[h_], T[g_])),
    ]
    reports = []
    for name, (lhs, factors) in zip(RELATION_NAMES, sides):
        rhs = _chain(*factors)
        bad = np.any(lhs != rhs, axis=-1)
        if missing:
            bad[missing, :] = True
        hits = np.argwhere(bad)
        if len(hits) == 0:
            reports.append(passed(name))
            continue
        g, h = (int(i) for i in hits[0])
        detail = "bar g does not exist" if bar[g] is None else f"bar {g} = {bar[g]}"
        reports.append(failed(name, (g, h), detail))
    return reports


def verify_hypotheses(triple: TranslationTriple, tbl: CayleyTable) -> HypothesisReport:
    """Check the four reconstruction hypotheses exhaustively against ``tbl``."""
    if triple.n != tbl.order:
        raise IncompatibleDegreeError(f"triple has {triple.n} elements, table has {tbl.order}")
    h1 = _check_h1(triple)
    cands = _bar_candidates(triple)
    bar = [min(c) if c else None for c in cands]
    missing = [g for g, b in enumerate(bar) if b is None]
    law2 = "H2: bar g exists"
    h2 = failed(law2, (missing[0],), f"no h with S_h = S_{missing[0]}^-1 and T_h = T_{missing[0]}^-1") \
        if missing else passed(law2)
    h3 = _check_h3(triple, tbl, bar)
    h4 = _check_h4(triple)
    return HypothesisReport(h1, h2, h3, h4)


# -- reconstruction -----------------------------------------------------------

def reconstruct_multiplication(triple: TranslationTriple) -> CayleyTable:
    """Recover g*h as the k with S_k = P_{bar g} S_h T_{bar g} and T_k = S_{bar g} T_h P_{bar g}."""
    for rep in (_check_h1(triple), _check_h4(triple)):
        if not rep.passed:
            raise HypothesisViolation(str(rep))
    bar = np.array(derive_bar(triple).bar)
    S, T, P = triple.stacks
    Sb, Tb, Pb = S[bar], T[bar], P[bar]
    g_ = (slice(None), None)
    h_ = (None, slice(None))
    s_target = _chain(Pb[g_], S[h_], Tb[g_])
    t_target = _chain(Sb[g_], T[h_], Pb[g_])
    rows = []
    for g in range(triple.n):
        row = []
        for h in range(triple.n):
            ks = triple.lookup(s_target[g, h], t_target[g, h])
            if not ks:
                raise ReconstructionError(g, h, tuple(s_target[g, h].tolist()),
                                          tuple(t_target[g, h].tolist()))
            row.append(ks[0])
        rows.append(tuple(row))
    return CayleyTable(tuple(rows))


# -- derived propositions -------------------------------------------------------

def derive_unit_and_inverses(tbl: CayleyTable, bar: BarMap) -> MoufangCertificate:
    t = tbl.table
    n = tbl.order
    e = t[0][bar[0]]
    for g in range(n):
        b = bar[g]
        if t[g][b] != t[b][g]:
            raise CertificateError(
                f"g*bar g = {t[g][b]} differs from bar g*g = {t[b][g]} at g = {g}", (g,))
        if t[g][b] != e:
            raise CertificateError(
                f"g*bar g depends on g: elements 0 and {g} give {e} and {t[g][b]}", (0, g))
    for g in range(n):
        if t[e][g] != g or t[g][e] != g:
            raise CertificateError(f"unit law fails: e*{g} = {t[e][g]}, {g}*e = {t[g][e]}", (g,))
    if bar[e] != e:
        raise CertificateError(f"bar e = {bar[e]} is not e = {e}", (e,))
    reports = [
        passed("g bar g = bar g g"),
        passed("g bar g independent of g", f"e = {e}"),
        passed("eg = ge = g"),
        passed("bar e = e"),
    ]
    return MoufangCertificate(e, tuple(bar.bar), reports)


def _find_unit_image(triple: TranslationTriple) -> Optional[int]:
    S, T, _ = triple.stacks
    ident = np.arange(triple.m)
    hits = np.flatnonzero(np.all(S == ident, axis=1) & np.all(T == ident, axis=1))
    return int(hits[0]) if len(hits) else None


def check_group_element_identities(triple: TranslationTriple, bar: BarMap) -> list[CheckReport]:
    S, T, P = triple.stacks
    b = np.array(bar.bar)
    reports = [
        _perm_report("P_{bar g} = P_g^-1", P[b], _invert(P)),
        _perm_report("P_{bar g} = S_g T_g", P[b], _chain(S, T)),
        _perm_report("S_g T_g = T_g S_g", _chain(S, T), _chain(T, S)),
        _perm_report("T_g P_g = P_g T_g", _chain(T, P), _chain(P, T)),
        _perm_report("P_g S_g = S_g P_g", _chain(P, S), _chain(S, P)),
    ]
    law = "S_e = T_e = P_e = E"
    e = _find_unit_image(triple)
    if e is None:
        reports.append(failed(law, (0,), "no element has S = T = E"))
    elif not np.array_equal(P[e], np.arange(triple.m)):
        reports.append(failed(law, (e,), f"P_{e} is not the identity"))
    else:
        reports.append(passed(law, f"e = {e}"))
    return reports


def check_triple_closure(triple: TranslationTriple, tbl: CayleyTable) -> CheckReport:
    """S_g S_h S_g = S_{(gh)g} and likewise for T and P, for all g, h."""
    flex = axioms.check_flexible(tbl)
    if not flex.passed:
        raise FlexibilityError(f"triple closure needs a flexible table: {flex}")
    arr = tbl.array
    ghg = arr[arr, np.arange(tbl.order)[:, None]]    # [g, h] -> (g h) g
    g_ = (slice(None), None)
    h_ = (None, slice(None))
    law = "triple closure"
    found = []
    for name, X in zip("STP", triple.stacks):
        w = _first_mismatch(X[ghg], _chain(X[g_], X[h_], X[g_]))
        if w is not None:
            found.append((w, name))
    if not found:
        return passed(law)
    w, name = min(found)
    return failed(law, w, f"{name}_g {name}_h {name}_g != {name}_(gh)g")


def solve_in_loop(tbl: CayleyTable, cert: MoufangCertificate,
                  side: Literal["left", "right"], g: int, h: int) -> int:
    """Solve g x = h (left) or x g = h (right) through the certified inverse."""
    t = tbl.table
    inv = cert.inverse[g]
    if side == "left":
        x = t[inv][h]
        sols = [y for y in range(tbl.order) if t[g][y] == h]
    elif side == "right":
        x = t[h][inv]
        sols = [y for y in range(tbl.order) if t[y][g] == h]
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    if sols != [x]:
        raise CertificateInconsistentError(
            f"{side} division {g}, {h}: formula gives {x}, solutions are {sols}")
    return x


def _table_report(law, lhs, rhs, detail="") -> CheckReport:
    hits = np.argwhere(np.asarray(lhs) != np.asarray(rhs))
    if len(hits) == 0:
        return passed(law)
    return failed(law, tuple(int(i) for i in hits[0]), detail)


def run_proposition_suite(triple: TranslationTriple, tbl: CayleyTable) -> list[CheckReport]:
    """Check every consequence of the hypotheses; refuses to run if they fail."""
    hyp = verify_hypotheses(triple, tbl)
    if not hyp.overall:
        raise HypothesisViolation(f"hypotheses fail: {hyp.first_failure()}")
    S, T, P = triple.stacks
    n, m = triple.n, triple.m
    arr = tbl.array
    ident = np.arange(m)
    barmap = derive_bar(triple)
    b = np.array(barmap.bar)
    idx = np.arange(n)
    reports: list[CheckReport] = []

    reports.append(_table_report("bar bar g = g", b[b], idx))
    bg_g = arr[b, idx]
    g_bg = arr[idx, b]
    for label, prod in (("X_{bar g g} = E", bg_g), ("X_{g bar g} = E", g_bg)):
        stacked = np.stack([S[prod], T[prod], P[prod]], axis=1)   # [g, letter, m]
        bad = np.any(stacked != ident, axis=-1).any(axis=-1)
        hits = np.flatnonzero(bad)
        reports.append(passed(label) if len(hits) == 0 else failed(label, (int(hits[0]),)))
    reports.extend(check_group_element_identities(triple, barmap))
    reports.append(_table_report("g bar g = bar g g", g_bg, bg_g))

    try:
        cert = derive_unit_and_inverses(tbl, barmap)
    except CertificateError as exc:
        reports.append(failed("unit and inverses", exc.witness or (0,), str(exc)))
        return reports
    reports.extend(cert.reports)
    e = cert.unit

    hs = idx[None, :]
    reports.append(_table_report("g (bar g h) = h", arr[idx[:, None], arr[b[:, None], hs]],
                                 np.broadcast_to(hs, (n, n))))
    reports.append(_table_report("(h bar g) g = h", arr[arr[hs, b[:, None]], idx[:, None]],
                                 np.broadcast_to(hs, (n, n))))
    q = axioms.check_quasigroup(tbl)
    reports.append(CheckReport("unique solvability", q.passed, q.witness, q.detail))
    reports.append(axioms.check_inverse_property(tbl))
    reports.append(_table_report("bar is the loop inverse", b,
                                 np.array(axioms.inverse_map(tbl))))
    reports.append(axioms.check_antiautomorphism(tbl))

    g_ = (slice(None), None)
    h_ = (None, slice(None))
    inv_gh = b[arr]
    hinv_ginv = arr[b[None, :], b[:, None]]    # [g, h] -> bar h * bar g
    reports.append(_perm_report_all(
        "S_{(gh)^-1} = T_g S_{bar h} P_g = S_{bar h bar g}",
        (S[inv_gh], _chain(T[g_], S[b][h_], P[g_])), (S[inv_gh], S[hinv_ginv])))
    reports.append(_perm_report_all(
        "T_{(gh)^-1} = P_g T_{bar h} S_g = T_{bar h bar g}",
        (T[inv_gh], _chain(P[g_], T[b][h_], S[g_])), (T[inv_gh], T[hinv_ginv])))

    flex = axioms.check_flexible(tbl)
    reports.append(flex)
    if flex.passed:
        reports.append(check_triple_closure(triple, tbl))
    reports.append(axioms.check_moufang(tbl))
    reports.append(_moufang_image_chain(triple, tbl))
    return reports


def _moufang_image_chain(triple: TranslationTriple, tbl: CayleyTable) -> CheckReport:
    """X_{(gh)(kg)} = X_g X_{hk} X_g = X_{g(hk)g} for X in {S, T}."""
    law = "Moufang identity via S, T images"
    arr = tbl.array
    S, T, _ = triple.stacks
    for g in range(tbl.order):
        lhs_idx = arr[arr[g][:, None], arr[:, g][None, :]]
        rhs_idx = arr[arr[g][arr], g]
        for name, X in (("S", S), ("T", T)):
            middle = _chain(X[g], X[arr], X[g])
            w = _first_mismatch(X[lhs_idx], middle) or _first_mismatch(middle, X[rhs_idx])
            if w is not None:
                h, k = w
                return failed(law, (g, h, k), f"{name}-images disagree")
    return passed(law)
