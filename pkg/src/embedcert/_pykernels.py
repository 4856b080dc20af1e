"""Pure-Python GF(2) kernels over int bitsets (bit i = coordinate i).

Same contract as the compiled ``_ckernels`` module; selected by
``embedcert._backend`` when the extension is unavailable.
"""

from __future__ import annotations

NAME = "python"


def rref(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Fully reduced row echelon form.

    Pivot column is the lowest-index column with a nonzero entry at or
    below the current row; the pivot row is the first such row. Returns the
    nonzero reduced rows (in pivot order) and their pivot columns.
    """
    work = [r for r in rows if r]
    pivots: list[int] = []
    top = 0
    n = len(work)
    for col in range(ncols):
        if top == n:
            break
        bit = 1 << col
        for p in range(top, n):
            if work[p] & bit:
                break
        else:
            continue
        work[top], work[p] = work[p], work[top]
        prow = work[top]
        for r in range(n):
            if r != top and work[r] & bit:
                work[r] ^= prow
        pivots.append(col)
        top += 1
    return work[:top], pivots


def min_weight_combination(basis: list[int], ncols: int, stop_at: int) -> tuple[int, int]:
    """Minimum popcount over all nonzero combinations of ``basis``.

    Walks the 2^r - 1 combinations in Gray-code order, one XOR per step,
    and stops as soon as a vector of weight <= ``stop_at`` is seen. Returns
    ``(weight, vector)``; ``(0, 0)`` for an empty basis.
    """
    r = len(basis)
    if r == 0:
        return 0, 0
    cur = 0
    best_w = ncols + 1
    best_i = 0
    for i in range(1, 1 << r):
        cur ^= basis[(i & -i).bit_length() - 1]
        w = cur.bit_count()
        if w < best_w:
            best_w = w
            best_i = i
            if w <= stop_at:
                break
    mask = best_i ^ (best_i >> 1)
    vec = 0
    j = 0
    while mask:
        if mask & 1:
            vec ^= basis[j]
        mask >>= 1
        j += 1
    return best_w, vec


def span_weights(basis: list[int]) -> list[tuple[int, int]]:
    """All nonzero span vectors with their weights, in Gray-code order."""
    out = []
    cur = 0
    for i in range(1, 1 << len(basis)):
        cur ^= basis[(i & -i).bit_length() - 1]
        out.append((cur.bit_count(), cur))
    return out
