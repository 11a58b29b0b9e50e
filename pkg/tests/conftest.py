import numpy as np
import pytest
from hypothesis import settings, strategies as st

from findual.poset import random_poset
from findual.modal import RelSpace

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def posets(draw, max_size=6):
    n = draw(st.integers(0, max_size))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_poset(np.random.default_rng(seed), n)


@st.composite
def relspaces(draw, max_size=4):
    n = draw(st.integers(1, max_size))
    bits = draw(st.integers(0, (1 << (n * n)) - 1))
    rel = np.array([bits >> k & 1 for k in range(n * n)], dtype=bool).reshape(n, n)
    return RelSpace(rel)


@pytest.fixture
def fixtures_dir(request):
    return request.config.rootpath / "fixtures"
