import pytest
from hypothesis import given, settings, strategies as st

import oracles
from moufang import axioms, fixtures
from moufang.axioms import Rung, classify
from moufang.errors import MissingInverseError, NotALoopError
from moufang.magma import CayleyTable

from conftest import GROUPS, MOUFANG

LOOPS5 = list(fixtures.enumerate_loops(5))


def recheck(rep, fn):
    """A failed report's witness must be a genuine violation according to an oracle predicate."""
    assert not rep.passed
    assert fn(*rep.witness)


def test_quasigroup():
    assert axioms.check_quasigroup(fixtures.cyclic_group(6)).passed
    rep = axioms.check_quasigroup(CayleyTable(((0, 1, 2), (1, 1, 0), (2, 0, 1))))
    assert not rep.passed and rep.witness == ("row", 1, 1)


@pytest.mark.parametrize("seed", range(10))
def test_random_loops_are_quasigroups(seed):
    assert axioms.check_quasigroup(fixtures.random_loop(5, seed)).passed


def test_loop():
    assert axioms.check_loop(fixtures.symmetric_group_3()).passed
    assert axioms.check_loop(fixtures.chein_s3()).passed
    # [[1,0],[0,1]] is Z2 with unit 1, so it is a loop
    assert axioms.check_loop(CayleyTable(((1, 0), (0, 1)))).passed
    # g*h = 2g + 2h mod 3 is Latin with no two-sided unit
    t = CayleyTable(((0, 2, 1), (2, 1, 0), (1, 0, 2)))
    assert oracles.is_latin(t.table) and oracles.unit(t.table) is None
    rep = axioms.check_loop(t)
    assert not rep.passed and rep.witness == (0, 1)


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_groups_pass_every_law(name):
    tbl = GROUPS[name]
    for check in (axioms.check_moufang, axioms.check_flexible, axioms.check_inverse_property,
                  axioms.check_antiautomorphism, axioms.check_associative):
        assert check(tbl).passed
    assert classify(tbl).rung == Rung.GROUP


def test_chein_s3_laws(chein):
    assert oracles.moufang_failure(chein.table) is None
    assert axioms.check_moufang(chein).passed
    assert axioms.check_inverse_property(chein).passed
    assert axioms.check_antiautomorphism(chein).passed
    assert axioms.check_flexible(chein).passed
    rep = axioms.check_associative(chein)
    assert rep.witness == oracles.associative_failure(chein.table)
    t = chein.table
    recheck(rep, lambda g, h, k: t[t[g][h]][k] != t[g][t[h][k]])


def test_moufang_requires_loop():
    with pytest.raises(NotALoopError):
        axioms.check_moufang(CayleyTable(((0, 1), (0, 1))))
    with pytest.raises(NotALoopError):
        axioms.check_inverse_property(CayleyTable(((0, 2, 1), (2, 1, 0), (1, 0, 2))))


def test_nonassociative_order5_loop_fails_moufang():
    loop = next(L for L in LOOPS5 if oracles.associative_failure(L.table))
    rep = axioms.check_moufang(loop)
    assert rep.witness == oracles.moufang_failure(loop.table)
    t = loop.table
    recheck(rep, lambda g, h, k: not (t[t[g][h]][t[k][g]] == t[t[g][t[h][k]]][g]
                                     == t[g][t[t[h][k]][g]]))


def test_non_ip_order5_loop():
    loop = next(L for L in LOOPS5 if oracles.ip_failure(L.table))
    rep = axioms.check_inverse_property(loop)
    assert rep.witness == oracles.ip_failure(loop.table)


def test_inverses_z5():
    tbl = fixtures.cyclic_group(5)
    assert axioms.check_inverse_property(tbl).passed
    assert axioms.inverse_map(tbl) == [(5 - x) % 5 for x in range(5)]


def test_flexibility_counterexample_order4():
    square = next(sq for sq in oracles.all_latin_squares(4) if oracles.flexible_failure(sq))
    rep = axioms.check_flexible(CayleyTable(square))
    assert rep.witness == oracles.flexible_failure(square)


def test_commutative_quasigroups_are_flexible():
    # checked exhaustively on every commutative 4x4 Latin square, not assumed
    commutative = [sq for sq in oracles.all_latin_squares(4)
                   if all(sq[a][b] == sq[b][a] for a in range(4) for b in range(4))]
    assert commutative
    for sq in commutative:
        assert axioms.check_flexible(CayleyTable(sq)).passed


def test_antiautomorphism_missing_inverse():
    with pytest.raises(MissingInverseError):
        axioms.check_antiautomorphism(CayleyTable(((0, 0), (0, 0))))
    # a unit exists but element 1 has no two-sided inverse
    with pytest.raises(MissingInverseError) as exc:
        axioms.check_antiautomorphism(CayleyTable(((0, 1, 2), (1, 1, 1), (2, 1, 0))))
    assert exc.value.element == 1


def test_associative_trivial():
    assert axioms.check_associative(fixtures.cyclic_group(1)).passed
    assert axioms.check_associative(fixtures.cyclic_group(8)).passed


def test_classify_examples(chein):
    assert classify(fixtures.cyclic_group(6)).rung == Rung.GROUP
    ladder = classify(chein)
    assert ladder.rung == Rung.MOUFANG_LOOP
    assert ladder.stopped_by.law == "associativity"
    assert ladder.describe() == "Moufang loop (non-associative)"
    assert classify(CayleyTable(((0, 1), (0, 1)))).rung == Rung.GROUPOID


def _oracle_rung(t):
    if not oracles.is_latin(t):
        return Rung.GROUPOID
    if oracles.unit(t) is None:
        return Rung.QUASIGROUP
    if oracles.inverses(t) is None or oracles.ip_failure(t):
        return Rung.LOOP
    if oracles.moufang_failure(t):
        return Rung.IP_LOOP
    if oracles.associative_failure(t):
        return Rung.MOUFANG_LOOP
    return Rung.GROUP


def _corpus():
    tables = list(MOUFANG.values()) + LOOPS5
    tables += [fixtures.random_loop(n, s) for n in (3, 6, 7) for s in range(5)]
    tables += [CayleyTable(sq) for sq in list(oracles.all_latin_squares(3))]
    tables += [CayleyTable(((0, 1), (0, 1))), CayleyTable(((0, 2, 1), (2, 1, 0), (1, 0, 2)))]
    return tables


@pytest.mark.parametrize("tbl", _corpus())
def test_ladder_matches_oracle_and_is_monotone(tbl):
    ladder = classify(tbl)
    assert ladder.rung == _oracle_rung(tbl.table)
    # monotone: every check below the reached rung passed
    assert all(r.passed for r in ladder.reports[: int(ladder.rung)])
    if ladder.rung >= Rung.MOUFANG_LOOP:
        assert axioms.check_flexible(tbl).passed
        assert axioms.check_inverse_property(tbl).passed
        assert axioms.check_antiautomorphism(tbl).passed


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 9), st.integers(0, 2**32))
def test_failed_witnesses_are_genuine(n, seed):
    tbl = fixtures.random_loop(n, seed)
    t = tbl.table
    assert axioms.check_loop(tbl).passed and oracles.unit(t) == 0
    rep = axioms.check_associative(tbl)
    assert rep.witness == oracles.associative_failure(t)
    rep = axioms.check_moufang(tbl)
    assert rep.witness == oracles.moufang_failure(t)
    rep = axioms.check_flexible(tbl)
    assert rep.witness == oracles.flexible_failure(t)
