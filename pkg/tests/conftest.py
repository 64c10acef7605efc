import pytest

from gwa import io
from gwa.core import (conjugation_gwa, cyclic_group, dihedral_group, identity_action_gwa,
                      quaternion_group)


def raw(g):
    return {"add": g.add.tolist(), "neg": g.neg.tolist(), "act": g.act.tolist()}


@pytest.fixture(scope="session")
def fleet():
    return {name: io.fixture(name) for name in io.FIXTURES}


@pytest.fixture(scope="session")
def big_fleet(fleet):
    """The bundled fixtures plus a few order-4 and order-8 algebras."""
    extra = [identity_action_gwa(cyclic_group(4)), conjugation_gwa(dihedral_group(4)),
             conjugation_gwa(quaternion_group()), identity_action_gwa(dihedral_group(4))]
    return list(fleet.values()) + extra


@pytest.fixture(scope="session")
def z2(fleet):
    return fleet["z2"]


@pytest.fixture(scope="session")
def z3(fleet):
    return fleet["z3"]


@pytest.fixture(scope="session")
def s3c(fleet):
    return fleet["s3_conj"]


@pytest.fixture(scope="session")
def trivial(fleet):
    return fleet["trivial"]
