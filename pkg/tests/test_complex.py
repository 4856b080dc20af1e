from itertools import combinations

import pytest
from hypothesis import given, settings

from embedcert import generators as gen
from embedcert.complex import (
    InputError,
    RidgeRegularity,
    barycentric_subdivision,
    format_facets,
    join,
    parse_facets,
)
from embedcert.homology import betti_vector

from conftest import corpus
from oracles import betti_mod2, f_vector
from strategies import complexes, to_complex


def _labeled(cx):
    return {tuple(sorted(f)) for f in cx.facet_labels()}


def test_parse_absorbs_nonmaximal_and_comments():
    cx = parse_facets("# a triangle plus a stray edge\n1 2 3\n1 2\n\n3 4  # pendant\n")
    assert cx.f_vector == (4, 4, 1)
    assert _labeled(cx) == {("1", "2", "3"), ("3", "4")}
    assert not cx.is_pure()


def test_parse_duplicate_vertex_names_line():
    with pytest.raises(InputError) as err:
        parse_facets("1 2 3\n\n4 4 5\n")
    assert err.value.line == 3
    assert "line 3" in str(err.value)


def test_isolated_vertex_facet():
    cx = parse_facets("a b\nc\n")
    assert cx.f_vector == (3, 1)
    assert betti_vector(cx) == (2, 0)


def test_empty_input():
    assert parse_facets("# nothing\n").dim == -1


def test_format_roundtrip(corpus_item):
    _, cx = corpus_item
    again = parse_facets(format_facets(cx, "round trip"))
    assert _labeled(again) == _labeled(cx)
    assert again.f_vector == cx.f_vector
    assert again.digest() == cx.digest()


def test_digest_ignores_facet_and_vertex_order():
    a = parse_facets("1 2 3\n3 4\n")
    b = parse_facets("4 3\n3 1 2\n")
    assert a.digest() == b.digest()
    assert a.digest() != parse_facets("1 2 3\n2 4\n").digest()


@given(complexes())
@settings(max_examples=200)
def test_f_vector_matches_itertools_closure(data):
    facets, cx = data
    assert cx.f_vector == f_vector(facets)


@given(complexes())
@settings(max_examples=200)
def test_downward_closure(data):
    _, cx = data
    for k in range(1, cx.dim + 1):
        lower = set(cx.faces(k - 1))
        for face in cx.faces(k):
            assert all(sub in lower for sub in combinations(face, k))


def _fk(fv, i):
    if i == -1:
        return 1
    return fv[i] if 0 <= i < len(fv) else 0


def _join_convolution(fa, fb, k):
    return sum(_fk(fa, i) * _fk(fb, k - 1 - i) for i in range(-1, k + 1))


JOIN_PARTS = [gen.complete_graph(3), gen.cycle(4), gen.simplex_boundary(2), gen.path(3),
              gen.simplex(1), gen.complete_bipartite(2, 3), gen.simplex_boundary(3)]


@pytest.mark.parametrize("a", range(len(JOIN_PARTS)))
@pytest.mark.parametrize("b", range(len(JOIN_PARTS)))
def test_join_convolution(a, b):
    A = JOIN_PARTS[a]
    B = JOIN_PARTS[b].relabel([f"y{i}" for i in range(JOIN_PARTS[b].n)])
    if A.n + B.n > 12:
        pytest.skip("outside the size range")
    J = join(A, B)
    for k in range(J.dim + 1):
        assert J.f(k) == _join_convolution(A.f_vector, B.f_vector, k)


def test_join_label_clash():
    with pytest.raises(ValueError):
        join(gen.cycle(3), gen.cycle(4))


def test_generator_examples():
    assert gen.complete_graph(5).f_vector == (5, 10)
    assert gen.cross_polytope_boundary(3).f_vector == (6, 12, 8)
    assert gen.rp2_6().f_vector == (6, 15, 10)
    assert gen.moebius5().f_vector == (5, 10, 5)
    assert gen.torus7().f_vector == (7, 21, 14)
    assert gen.simplex_skeleton(7, 2).f_vector == (7, 21, 35)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_suspension_of_bipartite_face_counts(n):
    # two apexes over 2n vertices: every vertex and edge of K_{n,n} is coned twice
    cx = gen.suspension_of("complete_bipartite", n, n)
    assert cx.f_vector == (2 * n + 2, n * n + 4 * n, 2 * n * n)
    assert cx.f_vector == f_vector([[cx.labels[v] for v in f] for f in cx.facets])


def test_generator_errors():
    with pytest.raises(ValueError):
        gen.generate("nope", 3)
    with pytest.raises(ValueError):
        gen.generate("complete_graph", 0)
    with pytest.raises(ValueError):
        gen.generate("complete_graph", "x")
    with pytest.raises(ValueError):
        gen.parse_gen_spec("gen:")


def test_ridge_regularity():
    assert gen.rp2_6().ridge_regularity() is RidgeRegularity.CLOSED
    assert gen.torus7().ridge_regularity() is RidgeRegularity.CLOSED
    assert gen.moebius5().ridge_regularity() is RidgeRegularity.WITH_BOUNDARY
    assert gen.simplex_skeleton(5, 1).ridge_regularity() is RidgeRegularity.NON_PSEUDOMANIFOLD


def test_coloring_examples():
    octa = gen.cross_polytope_boundary(3)
    colors = octa.balanced_coloring()
    assert colors is not None
    for i in range(1, 4):
        assert colors[octa.labels.index(f"+{i}")] == colors[octa.labels.index(f"-{i}")]
    assert gen.simplex_boundary(3).balanced_coloring() is None
    assert gen.complete_bipartite(3, 4).is_balanced()
    assert not gen.cycle(5).is_balanced()


@given(complexes(min_dim=1))
@settings(max_examples=200)
def test_coloring_is_proper(data):
    _, cx = data
    colors = cx.balanced_coloring()
    if colors is None:
        return
    assert max(colors) <= cx.dim
    for u, v in cx.faces(1):
        assert colors[u] != colors[v]


def _brute_colorable(cx):
    from itertools import product

    edges = cx.faces(1)
    return any(all(c[u] != c[v] for u, v in edges) for c in product(range(cx.dim + 1), repeat=cx.n))


@given(complexes(min_dim=1, max_vertices=6))
@settings(max_examples=150)
def test_coloring_search_is_exact(data):
    _, cx = data
    assert cx.is_balanced() == _brute_colorable(cx)


@pytest.mark.parametrize("name", [n for n, cx in corpus().items() if cx.n <= 8])
def test_subdivision_preserves_betti(name):
    cx = corpus()[name]
    sd = barycentric_subdivision(cx)
    assert betti_vector(sd) == betti_vector(cx)
    assert sd.is_balanced() or cx.dim == 0


def test_subdivision_face_counts():
    sd = barycentric_subdivision(gen.simplex(2))
    assert sd.f_vector == (7, 12, 6)
    assert sd.is_balanced()


@given(complexes(max_vertices=6, max_dim=2, max_facets=6))
@settings(max_examples=60)
def test_subdivision_betti_random(data):
    facets, cx = data
    assert betti_mod2([[int(x) for x in f] for f in facets]) == betti_vector(barycentric_subdivision(cx))


def test_skeleton_keeps_lower_facets():
    cx = parse_facets("1 2 3\n3 4\n")
    sk = cx.skeleton(1)
    assert sk.f_vector == (4, 4)
    assert sk.labels == cx.labels
    assert cx.skeleton(2) is cx


def test_concurrent_memo_reads():
    from concurrent.futures import ThreadPoolExecutor

    cx = to_complex([[0, 1, 2, 3], [2, 3, 4, 5], [1, 5, 6]])
    with ThreadPoolExecutor(8) as pool:
        out = list(pool.map(lambda _: betti_vector(cx), range(16)))
    assert len(set(out)) == 1
