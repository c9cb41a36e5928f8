import itertools

from hypothesis import strategies as st

from sumcolor.graph import from_edge_list


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected and n > 1:
        # hang a random spanning tree under the chosen edges
        order = draw(st.permutations(range(n)))
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            e = tuple(sorted((order[i], order[j])))
            if e not in chosen:
                chosen.append(e)
    return from_edge_list(n, chosen)
