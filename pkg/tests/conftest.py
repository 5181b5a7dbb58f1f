import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from moufang import fixtures  # noqa: E402


def group_fixtures():
    out = {f"Z{n}": fixtures.cyclic_group(n) for n in range(1, 9)}
    out["S3"] = fixtures.symmetric_group_3()
    out["Z2xZ2"] = fixtures.direct_product(fixtures.cyclic_group(2), fixtures.cyclic_group(2))
    return out


def moufang_fixtures():
    out = group_fixtures()
    out["chein(Z2)"] = fixtures.chein_double(fixtures.cyclic_group(2))
    out["chein(Z3)"] = fixtures.chein_double(fixtures.cyclic_group(3))
    out["chein(S3)"] = fixtures.chein_s3()
    return out


MOUFANG = moufang_fixtures()
GROUPS = group_fixtures()


@pytest.fixture
def chein():
    return fixtures.chein_s3()


@pytest.fixture
def s3():
    return fixtures.symmetric_group_3()
