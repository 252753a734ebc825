from __future__ import annotations

import random

import hypothesis.strategies as st

from knotcert.fixtures import (
    SEEDS,
    random_unimodular,
    congruent,
)
from knotcert.seifert import SeifertMatrix, block_sum, mirror


@st.composite
def seifert_matrices(draw, max_genus: int = 3) -> SeifertMatrix:
    """Valid Seifert matrices: seed block sums twisted by unimodular congruence."""
    v = draw(st.sampled_from(SEEDS))
    while v.genus < max_genus and draw(st.booleans()):
        extra = draw(st.sampled_from(SEEDS))
        if v.genus + extra.genus > max_genus:
            break
        if draw(st.booleans()):
            extra = mirror(extra)
        v = block_sum(v, extra)
    seed = draw(st.integers(0, 2**32 - 1))
    u = random_unimodular(v.size, random.Random(seed), steps=draw(st.integers(0, 5)))
    return congruent(v, u)
