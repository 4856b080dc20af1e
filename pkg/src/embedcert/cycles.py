"""Girth, minimum-weight top cycles, and m-complete bases of top Z2 homology.

The input complexes have no faces above their dimension d, so top homology
is the cycle space ``ker boundary_d`` and a cycle is just a bit vector over
the d-faces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from . import _backend, gf2
from .complex import SimplicialComplex
from .gf2 import BitVector, EchelonBasis
from .homology import boundary_matrix


class BudgetExceeded(RuntimeError):
    """An exact search would exceed its configured cap."""

    def __init__(self, what: str, needed: int, cap: int):
        self.what, self.needed, self.cap = what, needed, cap
        super().__init__(f"{what}: needs {needed}, cap is {cap}")


@dataclass(frozen=True)
class SearchBudget:
    max_kernel_dim: int = 22
    max_basis_kernel_dim: int = 14
    max_nodes: int = 2_000_000

    def __post_init__(self):
        if min(self.max_kernel_dim, self.max_basis_kernel_dim, self.max_nodes) <= 0:
            raise ValueError("budget values must be positive")


DEFAULT_BUDGET = SearchBudget()


class CertificateKind(str, Enum):
    GIRTH_WITNESS = "girth-witness"
    M_COMPLETE_BASIS = "m-complete-basis"
    REFUTATION = "refutation"


@dataclass(frozen=True)
class CycleCertificate:
    kind: CertificateKind
    cycles: tuple[BitVector, ...]
    m: int | None = None

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(c.weight for c in self.cycles)

    def supports(self, cx: SimplicialComplex) -> list[list[list[str]]]:
        faces = cx.faces(cx.dim)
        return [[[cx.labels[v] for v in faces[i]] for i in c.indices()] for c in self.cycles]

    def validate(self, cx: SimplicialComplex) -> bool:
        """Recheck from scratch: nonzero cycles; for bases also independence, count, multiplicity."""
        bd = boundary_matrix(cx, cx.dim)
        for c in self.cycles:
            if c.length != cx.f(cx.dim) or not c or bd.mul_vec(c):
                return False
        if self.kind is CertificateKind.M_COMPLETE_BASIS:
            if len(self.cycles) != top_cycle_rank(cx):
                return False
            if self.cycles and gf2.rank(gf2.BitMatrix.from_vectors(self.cycles)) != len(self.cycles):
                return False
            if self.cycles and max(gf2.BitMatrix.from_vectors(self.cycles).column_weights()) > self.m:
                return False
        return True


def cycle_basis(cx: SimplicialComplex) -> list[BitVector]:
    """Canonical basis of ``ker boundary_d`` (free columns ascending)."""
    if cx.dim < 1:
        raise ValueError("top cycles need dimension >= 1")
    return cx.memo("cycle_basis", lambda: gf2.kernel_basis(boundary_matrix(cx, cx.dim)))


def top_cycle_rank(cx: SimplicialComplex) -> int:
    return len(cycle_basis(cx))


def girth_lower_bound(cx: SimplicialComplex) -> int:
    """Verified lower bound without search: d+2, or 2^(d+1) for balanced complexes.

    The balanced bound concerns actual cycles, so it is used only when top
    homology is nonzero (otherwise the girth is d+2 by convention).
    """
    d = cx.dim
    if cycle_basis(cx) and cx.is_balanced():
        return max(d + 2, 2 ** (d + 1))
    return d + 2


def min_weight_cycle(cx: SimplicialComplex, budget: SearchBudget = DEFAULT_BUDGET) -> tuple[int, BitVector] | None:
    """Nonzero top cycle of least support, or None when there is none."""
    basis = cycle_basis(cx)
    if not basis:
        return None
    if len(basis) > budget.max_kernel_dim:
        raise BudgetExceeded("girth kernel dimension", len(basis), budget.max_kernel_dim)
    # nothing lighter than the verified bound exists, so reaching it ends the walk
    return gf2.min_weight_combination(basis, stop_at=girth_lower_bound(cx))


def girth(cx: SimplicialComplex, budget: SearchBudget = DEFAULT_BUDGET) -> int:
    found = min_weight_cycle(cx, budget)
    return cx.dim + 2 if found is None else found[0]


@dataclass(frozen=True)
class GirthValue:
    value: int
    exact: bool
    witness: BitVector | None = None

    @property
    def quality(self) -> str:
        return "exact" if self.exact else "lower-bound"


def girth_or_bound(cx: SimplicialComplex, budget: SearchBudget = DEFAULT_BUDGET) -> GirthValue:
    """Exact girth when the budget allows it, else the verified lower bound."""
    try:
        found = min_weight_cycle(cx, budget)
    except BudgetExceeded:
        return GirthValue(girth_lower_bound(cx), False)
    if found is None:
        return GirthValue(cx.dim + 2, True)
    return GirthValue(found[0], True, found[1])


@dataclass(frozen=True)
class Refutation:
    """``girth * beta_d > m * f_d``: no basis fits in the multiplicity budget."""

    girth: int
    beta: int
    f_top: int
    m: int
    weak_bound: bool

    @property
    def lhs(self) -> int:
        return self.girth * self.beta

    @property
    def rhs(self) -> int:
        return self.m * self.f_top


def counting_refutation(cx: SimplicialComplex, m: int, budget: SearchBudget = DEFAULT_BUDGET) -> Refutation | None:
    if cx.dim < 1 or m < 1:
        raise ValueError("counting refutation needs dimension >= 1 and m >= 1")
    r = top_cycle_rank(cx)
    g = girth_or_bound(cx, budget)
    ref = Refutation(g.value, r, cx.f(cx.dim), m, not g.exact)
    return ref if ref.lhs > ref.rhs else None


class Decision(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class MCompleteResult:
    decision: Decision
    certificate: CycleCertificate | None = None
    refutation: Refutation | None = None
    reason: str = ""
    nodes: int = 0


def m_complete_basis(cx: SimplicialComplex, m: int, budget: SearchBudget = DEFAULT_BUDGET) -> MCompleteResult:
    """Decide whether top Z2 homology has a basis using each d-face at most m times.

    Candidates are all nonzero cycles sorted by (weight, support indices).
    Backtracking picks them in that order, keeping the picks independent and
    every face's usage <= m, and prunes when even the lightest remaining
    candidates would not fit in the unused capacity.
    """
    if cx.dim < 1 or m < 1:
        raise ValueError("m-complete basis needs dimension >= 1 and m >= 1")
    basis = cycle_basis(cx)
    r = len(basis)
    nfaces = cx.f(cx.dim)
    if r == 0:
        return MCompleteResult(Decision.YES, CycleCertificate(CertificateKind.M_COMPLETE_BASIS, (), m),
                               reason="top homology is zero")
    ref = counting_refutation(cx, m, budget)
    if ref is not None:
        return MCompleteResult(Decision.NO, refutation=ref, reason="counting bound")
    if r > budget.max_basis_kernel_dim:
        return MCompleteResult(Decision.UNKNOWN, reason=f"kernel dimension {r} exceeds basis-search cap "
                                                        f"{budget.max_basis_kernel_dim}")

    cands = sorted(_backend.kernels.span_weights([b.bits for b in basis]),
                   key=lambda wb: (wb[0], BitVector(nfaces, wb[1]).indices()))
    weights = [w for w, _ in cands]
    vecs = [v for _, v in cands]
    # prefix sums of weights for the capacity bound
    prefix = [0]
    for w in weights:
        prefix.append(prefix[-1] + w)

    usage = [0] * nfaces
    chosen: list[int] = []
    nodes = 0
    capacity = m * nfaces

    def fits(v: int) -> bool:
        b = v
        while b:
            low = b & -b
            if usage[low.bit_length() - 1] >= m:
                return False
            b ^= low
        return True

    def bump(v: int, delta: int) -> None:
        b = v
        while b:
            low = b & -b
            usage[low.bit_length() - 1] += delta
            b ^= low

    def search(start: int, ech: EchelonBasis, used: int) -> bool | None:
        nonlocal nodes
        need = r - len(chosen)
        if need == 0:
            return True
        for i in range(start, len(cands) - need + 1):
            if prefix[i + need] - prefix[i] > capacity - used:
                break  # weights ascend, so later starts cannot fit either
            nodes += 1
            if nodes > budget.max_nodes:
                return None
            v = vecs[i]
            if not fits(v) or ech.reduce(v) == 0:
                continue
            nxt = ech.copy()
            nxt.add(BitVector(nfaces, v))
            bump(v, 1)
            chosen.append(i)
            res = search(i + 1, nxt, used + weights[i])
            if res is not False:
                return res
            chosen.pop()
            bump(v, -1)
        return False

    outcome = search(0, EchelonBasis(nfaces), 0)
    if outcome is None:
        return MCompleteResult(Decision.UNKNOWN, reason=f"node cap {budget.max_nodes} reached", nodes=nodes)
    if outcome:
        cert = CycleCertificate(CertificateKind.M_COMPLETE_BASIS,
                                tuple(BitVector(nfaces, vecs[i]) for i in chosen), m)
        return MCompleteResult(Decision.YES, cert, nodes=nodes)
    return MCompleteResult(Decision.NO, reason="exhaustive search found no basis", nodes=nodes)
