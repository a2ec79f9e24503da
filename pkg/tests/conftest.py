import pytest

import sstkit


@pytest.fixture(scope="session")
def fix_id():
    return sstkit.fixtures.load("FIX-ID")


@pytest.fixture(scope="session")
def fix_amb():
    return sstkit.fixtures.load("FIX-AMB")


@pytest.fixture(scope="session")
def fix_tsc():
    return sstkit.fixtures.load("FIX-TSC")


@pytest.fixture(scope="session")
def fix_tsc1():
    return sstkit.fixtures.load("FIX-TSC1")


@pytest.fixture(scope="session")
def fix_r2():
    return sstkit.fixtures.load("FIX-R2")


@pytest.fixture(scope="session")
def all_fixtures(fix_id, fix_amb, fix_tsc, fix_tsc1, fix_r2):
    return {
        "FIX-ID": fix_id,
        "FIX-AMB": fix_amb,
        "FIX-TSC": fix_tsc,
        "FIX-TSC1": fix_tsc1,
        "FIX-R2": fix_r2,
    }
