import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from embedcert import _backend, gf2
from embedcert.gf2 import BitMatrix, BitVector, EchelonBasis

from oracles import dense_rank_mod2
from strategies import bit_rows


def test_bitvector_roundtrip():
    v = BitVector.from_indices(70, [0, 5, 64, 69])
    assert v.indices() == [0, 5, 64, 69]
    assert v.weight == 4
    assert v.words == (1 | 1 << 5, 1 | 1 << 5)
    assert BitVector.from_list(v.to_list()) == v
    assert v[64] == 1 and v[63] == 0


def test_bitvector_rejects_padding_and_mismatch():
    with pytest.raises(ValueError):
        BitVector(3, 0b1000)
    with pytest.raises(ValueError):
        BitVector(3, 1) ^ BitVector(4, 1)


def test_matrix_product_and_transpose():
    A = BitMatrix.from_dense([[1, 1, 0], [0, 1, 1]])
    assert A.transpose().to_dense() == [[1, 0], [1, 1], [0, 1]]
    assert (A @ A.transpose()).to_dense() == [[0, 1], [1, 0]]
    assert A.column_weights() == [1, 2, 1]
    assert A.mul_vec(BitVector.from_list([1, 1, 1])).to_list() == [0, 0]


@given(bit_rows())
@settings(max_examples=1000)
def test_rank_nullity(data):
    nrows, ncols, rows = data
    M = BitMatrix(nrows, ncols, tuple(rows))
    basis = gf2.kernel_basis(M)
    assert gf2.rank(M) + len(basis) == ncols
    for v in basis:
        assert not M.mul_vec(v)


@given(bit_rows(max_rows=24, max_cols=24))
@settings(max_examples=200)
def test_rank_matches_dense_oracle(data):
    nrows, ncols, rows = data
    dense = [[(r >> c) & 1 for c in range(ncols)] for r in rows]
    assert gf2.rank(BitMatrix(nrows, ncols, tuple(rows))) == (dense_rank_mod2(dense) if ncols else 0)


@pytest.mark.skipif(_backend.compiled_kernels is None, reason="compiled backend not built")
@given(bit_rows(max_rows=80, max_cols=150))
@settings(max_examples=300)
def test_backends_bit_identical_rref(data):
    _, ncols, rows = data
    assert _backend.python_kernels.rref(rows, ncols) == _backend.compiled_kernels.rref(rows, ncols)


@pytest.mark.skipif(_backend.compiled_kernels is None, reason="compiled backend not built")
@given(st.integers(1, 12), st.integers(1, 130), st.integers(0, 5), st.randoms(use_true_random=False))
@settings(max_examples=200)
def test_backends_bit_identical_min_weight(r, ncols, stop_at, rnd):
    basis = [rnd.getrandbits(ncols) | (1 << rnd.randrange(ncols)) for _ in range(r)]
    py = _backend.python_kernels
    cy = _backend.compiled_kernels
    assert py.min_weight_combination(basis, ncols, stop_at) == cy.min_weight_combination(basis, ncols, stop_at)
    assert py.span_weights(basis) == cy.span_weights(basis)


def _naive_min_weight(basis: list[int]) -> int:
    best = None
    for mask in range(1, 1 << len(basis)):
        v = 0
        for j, b in enumerate(basis):
            if mask >> j & 1:
                v ^= b
        if v and (best is None or v.bit_count() < best):
            best = v.bit_count()
    return best


@given(st.integers(1, 10), st.integers(10, 90), st.randoms(use_true_random=False))
@settings(max_examples=150)
def test_gray_code_matches_naive_enumeration(backend, r, ncols, rnd):
    M = BitMatrix(r, ncols, tuple(rnd.getrandbits(ncols) for _ in range(r)))
    rows, _ = gf2.rref(M)
    basis = [BitVector(ncols, x) for x in rows]
    if not basis:
        return
    w, v = gf2.min_weight_combination(basis)
    assert w == v.weight == _naive_min_weight([b.bits for b in basis])
    assert gf2.is_in_span(basis, v)


def test_min_weight_early_exit(backend):
    basis = [BitVector.from_indices(10, [0, 1, 2, 3, 4]), BitVector.from_indices(10, [0, 1, 2, 3, 5])]
    w, v = gf2.min_weight_combination(basis, stop_at=5)
    assert (w, v.indices()) == (5, [0, 1, 2, 3, 4])
    w, v = gf2.min_weight_combination(basis, stop_at=0)
    assert (w, v.indices()) == (2, [4, 5])


def test_min_weight_empty_basis():
    assert gf2.min_weight_combination([]) is None


def test_span_membership_examples():
    e1, e2 = BitVector.from_indices(3, [0]), BitVector.from_indices(3, [1])
    assert gf2.is_in_span([], BitVector(3, 0))
    assert gf2.is_in_span([e1, e2], e1 ^ e2)
    assert not gf2.is_in_span([e1, e2], BitVector.from_indices(3, [2]))
    with pytest.raises(ValueError):
        gf2.is_in_span([e1], BitVector(4, 0))


def test_single_triangle_not_in_sphere_cycle_space():
    from embedcert import generators
    from embedcert.cycles import cycle_basis

    cx = generators.simplex_boundary(3)
    basis = cycle_basis(cx)
    for i in range(cx.f(2)):
        assert not gf2.is_in_span(basis, BitVector.from_indices(cx.f(2), [i]))


def test_echelon_basis_tracks_rank():
    rnd = random.Random(7)
    vecs = [BitVector(40, rnd.getrandbits(40)) for _ in range(30)]
    ech = EchelonBasis(40)
    added = sum(ech.add(v) for v in vecs)
    assert added == len(ech) == gf2.rank(BitMatrix.from_vectors(vecs))
    assert all(ech.contains(v) for v in vecs)


def test_kernel_basis_is_canonical(backend):
    M = BitMatrix.from_dense([[1, 1, 0, 1], [0, 1, 1, 0]])
    assert [v.indices() for v in gf2.kernel_basis(M)] == [[0, 1, 2], [0, 3]]


def test_determinism_across_threads(backend):
    from concurrent.futures import ThreadPoolExecutor

    rnd = random.Random(3)
    M = BitMatrix(50, 200, tuple(rnd.getrandbits(200) for _ in range(50)))
    with ThreadPoolExecutor(4) as pool:
        results = list(pool.map(lambda _: gf2.rref(M), range(8)))
    assert all(r == results[0] for r in results)


@pytest.mark.skipif(_backend.compiled_kernels is None, reason="compiled backend not built")
def test_compiled_rejects_huge_kernel():
    with pytest.raises(OverflowError):
        _backend.compiled_kernels.min_weight_combination([1 << i for i in range(63)], 63, 0)
