import pytest

import coxtwist as ct

F4_MATRIX = ((1, 3, 2, 2), (3, 1, 4, 2), (2, 4, 1, 3), (2, 2, 3, 1))
A3_MATRIX = ((1, 3, 2), (3, 1, 3), (2, 3, 1))


def dihedral(m, cap=ct.DEFAULT_CAP):
    return ct.build_system(((1, m), (m, 1)), cap=cap)


def a_system(n, cap=ct.DEFAULT_CAP):
    """Type A of rank n - 1, the symmetric group S_n."""
    rows = tuple(
        tuple(1 if i == j else 3 if abs(i - j) == 1 else 2 for j in range(n - 1))
        for i in range(n - 1)
    )
    return ct.build_system(rows, cap=cap)


@pytest.fixture(scope="session")
def f4():
    return ct.build_system(F4_MATRIX, cap=2000)


@pytest.fixture(scope="session")
def f4_theta(f4):
    return ct.validate_automorphism(f4, range(4), {0: 3, 3: 0, 1: 2, 2: 1})


@pytest.fixture(scope="session")
def f4_sub(f4_theta):
    return ct.enumerate_fixed_subgroup(f4_theta)


@pytest.fixture(scope="session")
def f4_cosets(f4_sub):
    return ct.all_cosets(f4_sub)


@pytest.fixture(scope="session")
def a3():
    return ct.build_system(A3_MATRIX)


@pytest.fixture(scope="session")
def a3_sub(a3):
    theta = ct.validate_automorphism(a3, range(3), {0: 2, 2: 0})
    return ct.enumerate_fixed_subgroup(theta)


def from_digits(sys, digits):
    """Element of a compact digit string of 1-based letters, e.g. '42312342'."""
    return ct.element_from_word(sys, [int(c) - 1 for c in digits])
