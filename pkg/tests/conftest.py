"""Shared hypothesis strategies for small graphs and complexes."""

from hypothesis import strategies as st

from graphburning import Graph, classify, from_generators


@st.composite
def graphs(draw, min_vertices=1, max_vertices=7):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = [(v, w) for v in range(n) for w in range(v + 1, n)]
    chosen = draw(st.sets(st.sampled_from(pairs)) if pairs
                  else st.just(set()))
    return Graph.from_edges(n, chosen)


@st.composite
def connected_graphs(draw, min_vertices=1, max_vertices=6):
    g = draw(graphs(min_vertices, max_vertices).filter(
        lambda g_: classify(g_).connected))
    return g


@st.composite
def complexes(draw, max_vertices=7, max_facets=6):
    n = draw(st.integers(1, max_vertices))
    facet = st.sets(st.integers(0, n - 1), min_size=1, max_size=4).map(
        lambda s: tuple(sorted(s)))
    generators = draw(st.lists(facet, min_size=1, max_size=max_facets))
    # Every vertex has to lie in some face.
    generators += [(v,) for v in range(n)]
    return from_generators(n, generators)
