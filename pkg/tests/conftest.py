import os

import pytest


# resolve ImportMismatchError when using virtual environment
os.environ["PY_IGNORE_IMPORTMISMATCH"] = "1"


# order parameters of the exact checks
@pytest.fixture(scope="session", params=[2, 3, 4, 5])
def p(request) -> int:
    return request.param


@pytest.fixture(scope="session", params=[3, 5])
def odd_p(request) -> int:
    return request.param


@pytest.fixture(scope="session", params=[2, 4])
def even_p(request) -> int:
    return request.param
