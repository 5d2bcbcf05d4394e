"""Shared fixtures: small signal sets and their worked-out fade states."""

import pytest

from lsnc import (
    build_constraints,
    build_srg,
    make_custom,
    make_pam,
    make_psk,
    make_square_qam,
)

# The rectangular 8-point grid used throughout the cross-constellation tests.
QAM8_POINTS = [-3 - 1j, -3 + 1j, -1 - 1j, -1 + 1j, 1 - 1j, 1 + 1j, 3 - 1j, 3 + 1j]


@pytest.fixture(scope="session")
def qam4():
    """4-QAM: {-1-j, -1+j, 1-j, 1+j} labelled in list order."""
    return make_square_qam(4)


@pytest.fixture(scope="session")
def qam16():
    return make_square_qam(16)


@pytest.fixture(scope="session")
def psk8():
    return make_psk(8)


@pytest.fixture(scope="session")
def psk16():
    return make_psk(16)


@pytest.fixture(scope="session")
def pam4():
    return make_pam(4)


@pytest.fixture(scope="session")
def qam8():
    """Rectangular 8-point constellation with -0.5-0.5j singular."""
    return make_custom(QAM8_POINTS)


@pytest.fixture(scope="session")
def qam4_partition(qam4):
    """Constraint partition of 4-QAM at the fade state (1+j)/2."""
    return build_constraints(qam4, 0.5 + 0.5j)


@pytest.fixture(scope="session")
def qam4_graph(qam4_partition):
    return build_srg(qam4_partition)
