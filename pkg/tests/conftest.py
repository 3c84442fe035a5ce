import random

import pytest
from hypothesis import settings, strategies as st

from eulersums.words import IndexVector

settings.register_profile("default", deadline=None, derandomize=True)
settings.load_profile("default")

letters = st.sampled_from((0, 1, -1))


def words(min_size=0, max_size=6):
    return st.lists(letters, min_size=min_size, max_size=max_size).map(tuple)


def convergent_words(min_size=1, max_size=6):
    return words(min_size, max_size).filter(lambda w: w[0] != 0 and w[-1] != 1)


@st.composite
def index_vectors(draw, max_weight=12):
    k0 = draw(st.integers(0, 3))
    budget = max_weight - k0
    ks, eps = [], []
    while budget > 0 and draw(st.booleans()):
        k = draw(st.integers(1, budget))
        ks.append(k)
        eps.append(draw(st.sampled_from((1, -1))))
        budget -= k
    return IndexVector(tuple(ks), tuple(eps), k0)


@pytest.fixture
def rng():
    return random.Random(20240611)
