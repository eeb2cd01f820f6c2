import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from listupdate import kernels

BACKENDS = ["python"] + (["compiled"] if kernels.BACKEND == "compiled" else [])

DATA = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@pytest.fixture
def data_dir():
    return DATA
