import random

import pytest
from hypothesis import strategies as st

from superlie import Alphabet, LiePoly, LieTerm

# the four alphabets used throughout the acceptance criteria
ACCEPTANCE_ALPHABETS = {
    "2 even": [("a", 0), ("b", 0)],
    "1 odd": [("x", 1)],
    "2 odd": [("x", 1), ("y", 1)],
    "even+odd": [("a", 0), ("b", 1)],
}


@pytest.fixture(params=sorted(ACCEPTANCE_ALPHABETS), ids=str)
def acceptance_alphabet(request):
    return Alphabet(ACCEPTANCE_ALPHABETS[request.param])


def random_tree(rng: random.Random, alphabet: Alphabet, weight: int) -> LieTerm:
    if weight == 1:
        return alphabet.leaf(rng.randrange(len(alphabet)))
    k = rng.randrange(1, weight)
    return LieTerm.node(random_tree(rng, alphabet, k), random_tree(rng, alphabet, weight - k))


def random_alphabet(rng: random.Random, max_gens: int = 3) -> Alphabet:
    r = rng.randint(1, max_gens)
    return Alphabet([(n, rng.randint(0, 1)) for n in "abc"[:r]])


def random_poly(rng, alphabet, max_weight=5, max_terms=3) -> LiePoly:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        terms.append((random_tree(rng, alphabet, rng.randint(1, max_weight)), rng.choice([-3, -2, -1, 1, 2, 3])))
    return LiePoly(terms)


@st.composite
def alphabets(draw, max_gens=3):
    pars = draw(st.lists(st.integers(0, 1), min_size=1, max_size=max_gens))
    return Alphabet([(n, p) for n, p in zip("abc", pars)])


@st.composite
def trees(draw, alphabet, max_weight=5):
    w = draw(st.integers(1, max_weight))

    def build(w):
        if w == 1:
            return alphabet.leaf(draw(st.integers(0, len(alphabet) - 1)))
        k = draw(st.integers(1, w - 1))
        return LieTerm.node(build(k), build(w - k))

    return build(w)
