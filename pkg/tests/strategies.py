from itertools import combinations

from hypothesis import strategies as st

from sgprod.core import build_graph


@st.composite
def signed_graphs(draw, max_n: int = 8, max_m: int = 16, min_m: int = 0):
    """Random simple signed graphs on at most ``max_n`` vertices."""
    n = draw(st.integers(min_value=2, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(
        st.lists(
            st.sampled_from(pairs),
            min_size=min(min_m, len(pairs)),
            max_size=min(max_m, len(pairs)),
            unique=True,
        )
    )
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=len(chosen), max_size=len(chosen)))
    return build_graph(n, [(u, v, s) for (u, v), s in zip(chosen, signs)])


def signs_of(length: int):
    return st.lists(st.sampled_from((1, -1)), min_size=length, max_size=length)
