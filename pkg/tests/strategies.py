"""Hypothesis strategies for small random complexes and bit matrices."""

from __future__ import annotations

from hypothesis import strategies as st

from embedcert.complex import from_facets


@st.composite
def facet_lists(draw, max_vertices: int = 7, max_dim: int = 3, max_facets: int = 10):
    n = draw(st.integers(2, max_vertices))
    facet = st.frozensets(st.integers(0, n - 1), min_size=1, max_size=max_dim + 1)
    facets = draw(st.lists(facet, min_size=1, max_size=max_facets))
    return [sorted(f) for f in facets]


def to_complex(facets):
    return from_facets([[f"v{v}" for v in f] for f in facets])


@st.composite
def complexes(draw, min_dim: int = 0, **kw):
    facets = draw(facet_lists(**kw).filter(lambda fs: max(len(f) for f in fs) - 1 >= min_dim))
    return facets, to_complex(facets)


@st.composite
def bit_rows(draw, max_rows: int = 64, max_cols: int = 64):
    nrows = draw(st.integers(0, max_rows))
    ncols = draw(st.integers(0, max_cols))
    rows = draw(st.lists(st.integers(0, (1 << ncols) - 1) if ncols else st.just(0),
                         min_size=nrows, max_size=nrows))
    return nrows, ncols, rows
