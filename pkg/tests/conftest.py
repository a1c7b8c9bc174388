import pytest

from gradedmod.field import FieldSpec
from gradedmod.graded_matrix import GradedMatrix

GF2 = FieldSpec.gf(2)
GF3 = FieldSpec.gf(3)
GF5 = FieldSpec.gf(5)
QQ = FieldSpec.rationals()
ALL_FIELDS = [GF2, GF3, GF5, QQ]


def gm(field, n, m, triples=()):
    """Graded matrix from 1-based (j, k, coeff, degree) triples."""
    return GradedMatrix.from_sparse(field, n, m, triples)


@pytest.fixture
def running_example():
    # [[T, T^2], [1, T]] over GF(2), n = (0, 1), m = (1, 2)
    return gm(GF2, [0, 1], [1, 2], [(1, 1, 1, 1), (1, 2, 1, 2), (2, 1, 1, 0), (2, 2, 1, 1)])


@pytest.fixture(params=ALL_FIELDS, ids=str)
def field(request):
    return request.param
