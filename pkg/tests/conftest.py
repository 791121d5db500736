import random

import pytest

from orbikit import assemble_diamond, build_kummer, build_projective_quotient, ProjectiveQuotientSpec


@pytest.fixture
def rng():
    return random.Random(20240527)


@pytest.fixture(scope="session")
def kummer2():
    return build_kummer(2)


@pytest.fixture(scope="session")
def kummer3():
    return build_kummer(3)


@pytest.fixture(scope="session")
def p2_mu3():
    return build_projective_quotient(
        ProjectiveQuotientSpec(2, (3,), ((0, 1, 2),)), name="p2_mu3"
    )


@pytest.fixture(scope="session")
def k3_diamond(kummer2):
    return assemble_diamond(kummer2)
