"""Reference computations that share no code with the package.

Everything here works on plain lists and tuples, recomputes face sets with
itertools, and does mod-2 elimination on dense 0/1 rows, so agreement with
the package is evidence rather than tautology.
"""

from __future__ import annotations

from itertools import combinations


def closure(facets) -> dict[int, list[tuple]]:
    faces: dict[int, set] = {}
    for f in facets:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            for sub in combinations(f, k):
                faces.setdefault(k - 1, set()).add(sub)
    return {k: sorted(v) for k, v in faces.items()}


def f_vector(facets) -> tuple[int, ...]:
    faces = closure(facets)
    return tuple(len(faces[k]) for k in range(len(faces)))


def dense_rank_mod2(rows: list[list[int]]) -> int:
    rows = [r[:] for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] % 2), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % 2:
                rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def boundary_dense(faces: dict[int, list[tuple]], k: int, columns=None) -> list[list[int]]:
    """Rows = (k-1)-faces, columns = k-faces (optionally a subset)."""
    cols = faces[k] if columns is None else columns
    row_index = {f: i for i, f in enumerate(faces[k - 1])}
    M = [[0] * len(cols) for _ in faces[k - 1]]
    for j, face in enumerate(cols):
        for sub in combinations(face, k):
            M[row_index[sub]][j] = 1
    return M


def betti_mod2(facets) -> tuple[int, ...]:
    faces = closure(facets)
    d = len(faces) - 1
    ranks = [0] * (d + 2)
    for k in range(1, d + 1):
        ranks[k] = dense_rank_mod2(boundary_dense(faces, k))
    return tuple(len(faces[k]) - ranks[k] - ranks[k + 1] for k in range(d + 1))


def brute_force_girth(facets) -> int:
    """Fewest top faces generating a subcomplex with nonzero top homology.

    Enumerates facet subsets by size; a subset generates a subcomplex with
    beta_d > 0 exactly when its boundary columns are dependent.
    """
    faces = closure(facets)
    d = len(faces) - 1
    top = faces[d]
    for size in range(1, len(top) + 1):
        for subset in combinations(top, size):
            if dense_rank_mod2(boundary_dense(faces, d, list(subset))) < size:
                return size
    return d + 2


def sympy_torsion(facets, k: int) -> list[int]:
    """Invariant factors > 1 of integral H_k via sympy's Smith normal form."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    faces = closure(facets)
    if k + 1 not in faces:
        return []
    rows = faces[k]
    row_index = {f: i for i, f in enumerate(rows)}
    cols = faces[k + 1]
    M = [[0] * len(cols) for _ in rows]
    for j, face in enumerate(cols):
        for i in range(len(face)):
            sub = face[:i] + face[i + 1:]
            M[row_index[sub]][j] = (-1) ** i
    snf = smith_normal_form(Matrix(M), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    return sorted(x for x in diag if x > 1)
