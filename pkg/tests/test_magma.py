import pytest

from moufang import fixtures
from moufang.errors import InvalidTableError, NotATranslationError
from moufang.magma import (CayleyTable, find_unit, is_latin_square, left_translation,
                           right_translation)
from moufang.perm import identity

from conftest import MOUFANG

Z2 = CayleyTable(((0, 1), (1, 0)))


def test_translations_z2():
    assert left_translation(Z2, 1).images == (1, 0)
    assert right_translation(Z2, 1).images == (1, 0)


@pytest.mark.parametrize("name", sorted(MOUFANG))
def test_unit_translations_are_identity(name):
    tbl = MOUFANG[name]
    e = find_unit(tbl)
    assert left_translation(tbl, e) == identity(tbl.order)
    assert right_translation(tbl, e) == identity(tbl.order)
    for g in range(tbl.order):
        left_translation(tbl, g)
        right_translation(tbl, g)


def test_translation_errors():
    tbl = CayleyTable(((0, 1, 2), (1, 1, 0), (2, 0, 1)))
    with pytest.raises(NotATranslationError) as exc:
        left_translation(tbl, 1)
    assert exc.value.repeated == 1
    with pytest.raises(NotATranslationError):
        right_translation(tbl, 1)


def test_latin_square():
    assert is_latin_square(Z2).passed
    rep = is_latin_square(CayleyTable(((0, 1), (0, 1))))
    assert not rep.passed and rep.witness == ("col", 0, 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_groups_up_to_6_are_latin(n):
    assert is_latin_square(fixtures.cyclic_group(n)).passed
    assert is_latin_square(fixtures.symmetric_group_3()).passed


def test_find_unit():
    assert find_unit(fixtures.cyclic_group(4)) == 0
    assert find_unit(CayleyTable(((0, 0), (0, 0)))) is None
    # Chein double places the group unit at its own index
    assert find_unit(fixtures.chein_s3()) == 0


def test_unit_found_off_zero():
    # Z3 relabelled so that the unit is element 2
    relabel = [2, 0, 1]
    z3 = fixtures.cyclic_group(3)
    back = {relabel[i]: i for i in range(3)}
    t = [[relabel[z3[back[a]][back[b]]] for b in range(3)] for a in range(3)]
    assert find_unit(CayleyTable(t)) == 2


@pytest.mark.parametrize("rows", [((0, 1), (1,)), ((0, 2), (1, 0)), ()])
def test_invalid_tables(rows):
    with pytest.raises(InvalidTableError):
        CayleyTable(rows)
