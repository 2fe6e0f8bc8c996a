import pytest

from crdbounds.bounds import Scenario
from crdbounds.cosmology import CosmologyParams, build_tables
from crdbounds.quantities import JULIAN_YEAR_S, planck_units


@pytest.fixture(scope="session")
def constants():
    return planck_units()


@pytest.fixture(scope="session")
def fiducial_params():
    return CosmologyParams.create(70.0, 0.3, 0.7)


@pytest.fixture(scope="session")
def fiducial_tables(fiducial_params):
    return build_tables(fiducial_params)


@pytest.fixture(scope="session")
def eds_params():
    return CosmologyParams.create(70.0, 1.0, 0.0)


@pytest.fixture(scope="session")
def eds_tables(eds_params):
    return build_tables(eds_params)


@pytest.fixture(scope="session")
def paper_scenarios(fiducial_params):
    """The canonical seven scenarios: 1000 m^3 lab for one Julian year,
    eight-input nearest-neighbor variant, fiducial cosmology."""
    return [
        Scenario.lab(1000.0, JULIAN_YEAR_S),
        Scenario.lab_nearest_neighbor(1000.0, JULIAN_YEAR_S, 8),
        Scenario.lab_fully_connected(1000.0, JULIAN_YEAR_S),
        Scenario.lab_broadcast(1000.0, JULIAN_YEAR_S),
        Scenario.universe(fiducial_params),
        Scenario.universe_fully_connected(fiducial_params),
        Scenario.universe_broadcast(fiducial_params),
    ]
