"""Boundary operators, Z2 Betti numbers, strong Morse quantities, integral torsion.

Betti numbers are non-reduced (``beta[0]`` counts components). Integer
boundaries use the sign ``(-1)**i`` for dropping the i-th vertex of a
sorted simplex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import gf2
from .complex import SimplicialComplex
from .gf2 import BitMatrix


class InvariantViolation(AssertionError):
    """An identity that holds for every complex failed: a bug, never bad input."""


def boundary_matrix(cx: SimplicialComplex, k: int) -> BitMatrix:
    """Z2 boundary map from k-chains to (k-1)-chains (rows: (k-1)-faces)."""
    if not 1 <= k <= cx.dim:
        raise ValueError(f"boundary dimension {k} out of range 1..{cx.dim}")

    def build() -> BitMatrix:
        index = cx.face_index(k - 1)
        rows = [0] * len(index)
        for j, s in enumerate(cx.faces(k)):
            bit = 1 << j
            for sub in combinations(s, k):
                rows[index[sub]] |= bit
        return BitMatrix(len(rows), cx.f(k), tuple(rows))

    return cx.memo(("boundary", k), build)


def integer_boundary(cx: SimplicialComplex, k: int) -> list[list[int]]:
    """Signed integer boundary matrix, rows (k-1)-faces, columns k-faces."""
    if not 1 <= k <= cx.dim:
        raise ValueError(f"boundary dimension {k} out of range 1..{cx.dim}")
    index = cx.face_index(k - 1)
    mat = [[0] * cx.f(k) for _ in range(len(index))]
    for j, s in enumerate(cx.faces(k)):
        for i in range(len(s)):
            mat[index[s[:i] + s[i + 1:]]][j] = -1 if i % 2 else 1
    return mat


def boundary_rank(cx: SimplicialComplex, k: int) -> int:
    """Z2 rank of the k-th boundary; zero outside 1..dim."""
    if not 1 <= k <= cx.dim:
        return 0
    return cx.memo(("rank", k), lambda: gf2.rank(boundary_matrix(cx, k)))


def betti_z2(cx: SimplicialComplex, k: int) -> int:
    if not 0 <= k <= cx.dim:
        raise ValueError(f"Betti index {k} out of range 0..{cx.dim}")
    return cx.f(k) - boundary_rank(cx, k) - boundary_rank(cx, k + 1)


def betti_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    return tuple(betti_z2(cx, k) for k in range(cx.dim + 1))


def morse_quantities(cx: SimplicialComplex) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(delta, chi)`` with ``delta[j] = f_j - beta_j`` and ``chi[j] = chi_{j-1}``.

    ``chi_{j-1}`` is the alternating sum ``delta_{j-1} - delta_{j-2} + ...``,
    so ``chi[0] = chi_{-1} = 0``. Each ``chi_{j-1}`` equals the rank of the
    j-th boundary, which is checked here along with the top-dimension
    Euler-Poincare form ``beta_d = f_d - chi_{d-1}``.
    """
    beta = betti_vector(cx)
    delta = tuple(cx.f(j) - beta[j] for j in range(cx.dim + 1))
    chi = tuple(sum((-1) ** (i - 1) * delta[j - i] for i in range(1, j + 1)) for j in range(cx.dim + 1))
    for j, c in enumerate(chi):
        if c < 0 or c != boundary_rank(cx, j):
            raise InvariantViolation(f"chi_{j - 1} = {c} disagrees with rank of boundary {j}")
    if cx.dim >= 0 and beta[-1] != cx.f(cx.dim) - chi[-1]:
        raise InvariantViolation("top Betti number != f_d - chi_{d-1}")
    return delta, chi


def euler_from_betti(cx: SimplicialComplex) -> int:
    return sum((-1) ** k * b for k, b in enumerate(betti_vector(cx)))


@dataclass(frozen=True)
class SkeletonIdentity:
    lhs: int
    rhs: int
    top_betti: int
    ridge_betti: int
    skeleton_ridge_betti: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def skeleton_identity(cx: SimplicialComplex) -> SkeletonIdentity:
    """``f_d = beta_d - beta_{d-1} + beta_{d-1}(codim-one skeleton)``."""
    d = cx.dim
    if d < 1:
        raise ValueError("skeleton identity needs dimension >= 1")
    top = betti_z2(cx, d)
    ridge = betti_z2(cx, d - 1)
    skel = betti_z2(cx.skeleton(d - 1), d - 1)
    return SkeletonIdentity(cx.f(d), top - ridge + skel, top, ridge, skel)


# Smith normal form --------------------------------------------------------


def smith_diagonal(matrix: list[list[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form, each entry dividing the next.

    Pivot is the entry of least absolute value in the remaining block;
    rows and columns are reduced against it until it divides everything it
    touches, then the rest of the block is checked for divisibility.
    Python integers are unbounded, so no step can overflow.
    """
    a = [row[:] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    diag: list[int] = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            moved = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            if rt[j]:
                                ri[j] -= q * rt[j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        moved = True
                        break
            if moved:
                continue
            rt = a[t]
            for j in range(t + 1, n):
                if rt[j]:
                    q = rt[j] // p
                    if q:
                        for row in a[t:]:
                            if row[t]:
                                row[j] -= q * row[t]
                    if rt[j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        moved = True
                        break
            if moved:
                continue
            bad = next(
                (i for i in range(t + 1, m) if any(a[i][j] % p for j in range(t + 1, n))),
                None,
            )
            if bad is None:
                break
            rt, rb = a[t], a[bad]
            for j in range(t, n):
                rt[j] += rb[j]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def integral_torsion(cx: SimplicialComplex, k: int) -> list[int]:
    """Invariant factors > 1 of integral ``H_k``, read from the SNF of the (k+1)-boundary."""
    if not 0 <= k < cx.dim:
        raise ValueError(f"torsion index {k} out of range 0..{cx.dim - 1}")
    return cx.memo(("torsion", k), lambda: [x for x in smith_diagonal(integer_boundary(cx, k + 1)) if x > 1])


def integral_betti(cx: SimplicialComplex, k: int) -> int:
    """Free rank of integral ``H_k`` from the SNF ranks of neighbouring boundaries."""
    rank_k = len(smith_diagonal(integer_boundary(cx, k))) if 1 <= k <= cx.dim else 0
    rank_k1 = len(smith_diagonal(integer_boundary(cx, k + 1))) if 1 <= k + 1 <= cx.dim else 0
    return cx.f(k) - rank_k - rank_k1


@dataclass(frozen=True)
class TorsionCertificate:
    """Nonzero torsion in ``H_{d-1}(K; Z)``; by universal coefficients this
    is the torsion of ``H^d(K; Z)``, which must vanish for a complex inside
    the (d+1)-sphere."""

    degree: int
    factors: tuple[int, ...]
    claim: str = "not topologically embeddable into S^{d+1}"


def torsion_obstruction(cx: SimplicialComplex) -> TorsionCertificate | None:
    if cx.dim < 2:
        raise ValueError("torsion obstruction needs dimension >= 2")
    factors = integral_torsion(cx, cx.dim - 1)
    if not factors:
        return None
    return TorsionCertificate(cx.dim - 1, tuple(factors), f"not topologically embeddable into S^{cx.dim + 1}")


@dataclass(frozen=True)
class HomologyProfile:
    d: int
    f: tuple[int, ...]
    beta: tuple[int, ...]
    delta: tuple[int, ...]
    chi: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * x for k, x in enumerate(self.f))


def homology_profile(cx: SimplicialComplex, with_torsion: bool = True) -> HomologyProfile:
    """Everything above in one record; ``torsion[k]`` covers ``H_k`` for k < d."""
    delta, chi = morse_quantities(cx)
    torsion = tuple(tuple(integral_torsion(cx, k)) for k in range(cx.dim)) if with_torsion else ()
    profile = HomologyProfile(cx.dim, cx.f_vector, betti_vector(cx), delta, chi, torsion)
    if profile.euler_characteristic != euler_from_betti(cx):
        raise InvariantViolation("Euler-Poincare formula failed")
    return profile
