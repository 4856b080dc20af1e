"""Face-number inequalities for embeddings, evaluated exactly, with verdicts.

Every inequality reads ``lhs <= rhs`` over exact rationals. Each is gated on
the hypotheses that make it a valid necessary condition for its target
space; a violated, applicable inequality is a non-embeddability certificate.
Nothing here ever certifies that an embedding exists.

The girth-based family (girth/Betti, the alternating and chi forms, the
ridge bound, both balanced forms and the low-dimensional corollaries) is
only a valid necessary condition when the top Betti number is positive:
with ``beta_d = 0`` a single d-simplex already breaks ``g <= 2 f_d``.
Those checks are therefore gated on ``beta_d >= 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb

from .complex import RidgeRegularity, SimplicialComplex
from .cycles import DEFAULT_BUDGET, GirthValue, SearchBudget, girth_lower_bound, girth_or_bound
from .homology import TorsionCertificate, betti_vector, betti_z2, integral_torsion, morse_quantities


class Target(str, Enum):
    CODIM1 = "codim1"  # PL into R^{d+1}
    CODIM0 = "codim0"  # PL into R^d
    SPHERE = "sphere"  # topologically into S^{d+1}


class Verdict(str, Enum):
    OBSTRUCTED = "OBSTRUCTED"
    NO_OBSTRUCTION = "NO_OBSTRUCTION"


@dataclass
class InequalityReport:
    name: str
    source: str
    formula: str
    applicable: bool
    reason: str = ""
    lhs: Fraction | None = None
    rhs: Fraction | None = None
    notes: list[str] = field(default_factory=list)
    sanity: bool = False

    @property
    def satisfied(self) -> bool | None:
        if not self.applicable:
            return None
        return self.lhs <= self.rhs

    @property
    def violated(self) -> bool:
        return self.satisfied is False

    @property
    def tight(self) -> bool:
        return self.applicable and self.lhs == self.rhs

    def to_dict(self) -> dict:
        def rat(x):
            return None if x is None else [x.numerator, x.denominator]

        return {
            "name": self.name,
            "source": self.source,
            "formula": self.formula,
            "applicable": self.applicable,
            "reason": self.reason,
            "lhs": rat(self.lhs),
            "rhs": rat(self.rhs),
            "satisfied": self.satisfied,
            "tight": self.tight,
            "sanity": self.sanity,
            "notes": list(self.notes),
        }


def _na(name: str, source: str, formula: str, reason: str, **kw) -> InequalityReport:
    return InequalityReport(name, source, formula, False, reason, **kw)


def _ok(name: str, source: str, formula: str, lhs, rhs, reason: str = "", **kw) -> InequalityReport:
    return InequalityReport(name, source, formula, True, reason, Fraction(lhs), Fraction(rhs), **kw)


class Facts:
    """Lazily computed invariants shared by the checks of one battery run."""

    def __init__(self, cx: SimplicialComplex, budget: SearchBudget = DEFAULT_BUDGET,
                 girth_override: GirthValue | None = None):
        if cx.dim < 1:
            raise ValueError("obstruction checks need dimension >= 1")
        self.cx = cx
        self.d = cx.dim
        self.n = cx.n
        self.budget = budget
        self._girth = girth_override
        self._delta_chi = None

    def f(self, k: int) -> int:
        return self.cx.f(k)

    @property
    def beta(self) -> tuple[int, ...]:
        return betti_vector(self.cx)

    @property
    def delta(self) -> tuple[int, ...]:
        return self._morse()[0]

    def chi(self, j: int) -> int:
        """``chi_j`` for -1 <= j <= d-1."""
        return self._morse()[1][j + 1]

    def _morse(self):
        if self._delta_chi is None:
            self._delta_chi = morse_quantities(self.cx)
        return self._delta_chi

    @property
    def top_betti(self) -> int:
        return self.beta[self.d]

    @property
    def connected(self) -> bool:
        return self.beta[0] == 1

    @property
    def balanced(self) -> bool:
        return self.cx.is_balanced()

    @property
    def girth_computed(self) -> bool:
        return self._girth is not None

    def girth(self) -> GirthValue:
        if self._girth is None:
            self._girth = girth_or_bound(self.cx, self.budget)
        return self._girth

    def use_girth_lower_bound(self) -> None:
        if self._girth is None:
            self._girth = GirthValue(girth_lower_bound(self.cx), False)


def _facts(cx, facts):
    return facts if facts is not None else Facts(cx)


def _top_gate(F: Facts) -> str | None:
    if F.top_betti < 1:
        return f"beta_{F.d} = 0: girth bounds need a nonzero top cycle"
    return None


def _girth_note(g: GirthValue) -> list[str]:
    if g.exact:
        return [f"girth {g.value} (exact)"]
    return [f"girth {g.value} is a verified lower bound (weak bound); a violation is still sound"]


# codimension one: girth family ---------------------------------------------

def check_girth_betti(cx: SimplicialComplex, facts: Facts | None = None) -> InequalityReport:
    """``g * (beta_d + 1) <= 2 f_d``, from a 2-complete basis of top homology."""
    F = _facts(cx, facts)
    name, src, form = "girth_betti", "girth-Betti bound from a 2-complete basis", "g*(beta_d+1) <= 2*f_d"
    gate = _top_gate(F)
    if gate:
        return _na(name, src, form, gate)
    g = F.girth()
    return _ok(name, src, form, g.value * (F.top_betti + 1), 2 * F.f(F.d), notes=_girth_note(g))


def alternating_sum(F: Facts, k: int) -> int:
    """``delta_{d-1} - delta_{d-2} + ... +/- delta_{d-k}``."""
    return sum((-1) ** (i - 1) * F.delta[F.d - i] for i in range(1, k + 1))


def check_alternating_bound(cx: SimplicialComplex, k: int, facts: Facts | None = None) -> InequalityReport:
    """Truncated form ``f_d <= g/(g-2) * (delta_{d-1} - ... + delta_{d-k} - 1)`` for odd k <= d."""
    F = _facts(cx, facts)
    name = f"alternating_k{k}"
    src = "truncated alternating-delta bound"
    form = f"f_d <= g/(g-2) * (sum_(i=1..{k}) (-1)^(i-1) delta_(d-i) - 1)"
    note = ["odd k is restricted to k <= d; delta_{-1} is undefined, so k = d+1 is not evaluated"]
    if k < 1 or k % 2 == 0 or k > F.d:
        return _na(name, src, form, f"k must be odd with 1 <= k <= d = {F.d}", notes=note)
    gate = _top_gate(F)
    if gate:
        return _na(name, src, form, gate, notes=note)
    g = F.girth()
    rhs = Fraction(g.value, g.value - 2) * (alternating_sum(F, k) - 1)
    return _ok(name, src, form, F.f(F.d), rhs, notes=note + _girth_note(g))


def check_chi_bound(cx: SimplicialComplex, facts: Facts | None = None) -> InequalityReport:
    """Exact form ``f_d <= g/(g-2) * (chi_{d-1} - 1)``; equivalent to the girth-Betti bound."""
    F = _facts(cx, facts)
    name, src, form = "chi_bound", "exact chi form of the girth-Betti bound", "f_d <= g/(g-2)*(chi_(d-1) - 1)"
    gate = _top_gate(F)
    if gate:
        return _na(name, src, form, gate)
    g = F.girth()
    rhs = Fraction(g.value, g.value - 2) * (F.chi(F.d - 1) - 1)
    return _ok(name, src, form, F.f(F.d), rhs, notes=_girth_note(g))


def check_ridge_bound(cx: SimplicialComplex, facts: Facts | None = None) -> InequalityReport:
    """``f_d <= (d+2)/d * (f_{d-1} - beta_{d-1} - 1)``: the k = 1 form with g >= d+2."""
    F = _facts(cx, facts)
    name, src = "ridge_bound", "k = 1 alternating bound with girth >= d+2"
    form = "f_d <= (d+2)/d * (f_(d-1) - beta_(d-1) - 1)"
    gate = _top_gate(F)
    if gate:
        return _na(name, src, form, gate)
    d = F.d
    rhs = Fraction(d + 2, d) * (F.f(d - 1) - F.beta[d - 1] - 1)
    return _ok(name, src, form, F.f(d), rhs)


def check_balanced(cx: SimplicialComplex, facts: Facts | None = None) -> list[InequalityReport]:
    """Both balanced forms, using girth >= 2^(d+1) for balanced complexes."""
    F = _facts(cx, facts)
    d = F.d
    p = 2 ** d
    specs = [
        ("balanced_betti", "balanced girth-Betti bound", "2^d*(beta_d+1) <= f_d"),
        ("balanced_chi", "balanced chi bound", "f_d <= 2^d/(2^d-1)*(chi_(d-1) - 1)"),
    ]
    if not F.balanced:
        reason = f"not balanced: 1-skeleton has no proper {d + 1}-coloring"
        return [_na(*s, reason) for s in specs]
    gate = _top_gate(F)
    if gate:
        return [_na(*s, gate) for s in specs]
    note = ["balanced hypothesis verified by an explicit coloring"]
    return [
        _ok(*specs[0], p * (F.top_betti + 1), F.f(d), notes=note),
        _ok(*specs[1], F.f(d), Fraction(p, p - 1) * (F.chi(d - 1) - 1), notes=note),
    ]


def check_lowdim_codim1(cx: SimplicialComplex, facts: Facts | None = None) -> list[InequalityReport]:
    """The explicit 2-in-3 and 3-in-4 consequences, each gated on dimension and connectivity."""
    F = _facts(cx, facts)
    d, n = F.d, F.n
    out = []

    r3 = [
        ("r3_connected", "connected 2-complex in R^3", "f_2 <= 2*(f_1 - beta_1 - n)"),
        ("r3_vertices", "vertex-count bound for 2-complexes in R^3", "f_2 <= n*(n-3)"),
        ("r3_balanced_vertices", "balanced vertex-count bound in R^3", "f_2 <= 4/9*(n^2 - 3n)"),
    ]
    if d != 2:
        out += [_na(*s, "needs d = 2") for s in r3]
    elif not F.connected:
        out += [_na(*s, f"needs a connected complex (beta_0 = {F.beta[0]})") for s in r3]
    elif _top_gate(F):
        out += [_na(*s, _top_gate(F)) for s in r3]
    else:
        out.append(_ok(*r3[0], F.f(2), 2 * (F.f(1) - F.beta[1] - n),
                       notes=["printed form; equals 2*(chi_1 - 1) with g >= 4 under non-reduced Betti numbers"]))
        out.append(_ok(*r3[1], F.f(2), n * (n - 3), notes=["from the connected form and f_1 <= C(n,2)"]))
        if F.balanced:
            out.append(_ok(*r3[2], F.f(2), Fraction(4, 9) * (n * n - 3 * n)))
        else:
            out.append(_na(*r3[2], "not balanced"))

    r4 = [
        ("r4_connected", "connected 3-complex in R^4", "f_3 <= 5/3*(f_2 - f_1 - beta_2 + beta_1 + n - 2)"),
        ("r4_betti1", "3-complex in R^4, Betti-1 form", "f_3 <= 5/3*(f_2 + beta_1 - 1)"),
        ("r4_vertices", "3-complex in R^4, vertex form", "f_3 <= 5/3*(C(n,3) + n - 2)"),
        ("r4_simply_connected", "simply connected 3-complex in R^4", "f_3 <= 5/3*(f_2 - 1)"),
    ]
    if d != 3:
        out += [_na(*s, "needs d = 3") for s in r4]
    elif not F.connected:
        out += [_na(*s, f"needs a connected complex (beta_0 = {F.beta[0]})") for s in r4]
    elif _top_gate(F):
        out += [_na(*s, _top_gate(F)) for s in r4]
    else:
        b = F.beta
        five3 = Fraction(5, 3)
        out.append(_ok(*r4[0], F.f(3), five3 * (F.f(2) - F.f(1) - b[2] + b[1] + n - 2)))
        out.append(_ok(*r4[1], F.f(3), five3 * (F.f(2) + b[1] - 1)))
        out.append(_ok(*r4[2], F.f(3), five3 * (comb(n, 3) + n - 2)))
        if b[1] == 0:
            out.append(_ok(*r4[3], F.f(3), five3 * (F.f(2) - 1),
                           notes=["simple connectivity gated by the Z2 proxy beta_1 = 0"]))
        else:
            out.append(_na(*r4[3], "beta_1(Z2) != 0, so the complex is not simply connected"))
    return out


def check_grunbaum(cx: SimplicialComplex, facts: Facts | None = None) -> InequalityReport:
    """Grunbaum's bound for pure complexes.

    For d >= 2 a violation rules out PL embeddings into every (d+1)-manifold;
    for d = 1 the bound ``f_1 <= 3 f_0 - 5`` is the planar-graph base case and
    only rules out the plane (K7 sits in the torus and breaks it).
    """
    F = _facts(cx, facts)
    d = F.d
    src = "Grunbaum's bound for pure complexes"
    if d == 1:
        form = "f_1 <= 3*f_0 - 5"
    else:
        form = "f_d <= 6/(d+1)*f_(d-1) - 10/(d(d+1))*f_(d-2)"
    if not cx.is_pure():
        return _na("grunbaum", src, form, "complex is not pure")
    if d == 1:
        return _ok("grunbaum", src, form, F.f(1), 3 * F.f(0) - 5,
                   notes=["d = 1: certifies non-embeddability into R^2 (not into arbitrary surfaces)"])
    rhs = Fraction(6, d + 1) * F.f(d - 1) - Fraction(10, d * (d + 1)) * F.f(d - 2)
    return _ok("grunbaum", src, form, F.f(d), rhs,
               notes=[f"a violation rules out every PL {d + 1}-manifold, not just R^{d + 1}"])


def check_sperner(cx: SimplicialComplex, i: int, j: int, facts: Facts | None = None) -> InequalityReport:
    """Sanity check ``f_i / f_j <= C(n, i+1) / C(n, j+1)``; holds for every complex."""
    F = _facts(cx, facts)
    name = f"sperner_{i}_{j}"
    form = f"f_{i}/f_{j} <= C(n,{i + 1})/C(n,{j + 1})"
    if not F.d >= i > j >= 0:
        return _na(name, "Sperner ratio bound", form, "needs d >= i > j >= 0", sanity=True)
    return _ok(name, "Sperner ratio bound", form, Fraction(F.f(i), F.f(j)),
               Fraction(comb(F.n, i + 1), comb(F.n, j + 1)),
               notes=["sanity bound: a violation means corrupted input or a bug"], sanity=True)


# codimension zero ------------------------------------------------------------

def check_codim0(cx: SimplicialComplex, facts: Facts | None = None) -> list[InequalityReport]:
    """Necessary conditions for a PL embedding into R^d."""
    F = _facts(cx, facts)
    d, n = F.d, F.n
    out = [_ok("codim0_top_homology", "top homology vanishes in R^d", "beta_d <= 0", F.top_betti, 0)]

    name, src = "codim0_skeleton_betti", "girth-Betti bound on the codimension-one skeleton"
    form = "(d+1)*(beta_(d-1)(skeleton) + 1) <= 2*f_(d-1)"
    if d < 2:
        out.append(_na(name, src, form, "needs d >= 2 (the skeleton must have dimension >= 1)"))
    else:
        skel_b = betti_z2(cx.skeleton(d - 1), d - 1)
        if skel_b < 1:
            out.append(_na(name, src, form, "skeleton has no top cycle"))
        else:
            out.append(_ok(name, src, form, (d + 1) * (skel_b + 1), 2 * F.f(d - 1),
                           notes=[f"beta_{d - 1}(skeleton) = {skel_b}"]))

    out.append(_ok("codim0_ridge", "ridge bound for R^d", "f_d <= 2/(d+1)*f_(d-1) - 1",
                   F.f(d), Fraction(2, d + 1) * F.f(d - 1) - 1))
    if d == 2:
        out.append(_ok("codim0_planar_vertices", "2-complex in R^2, vertex form", "f_2 <= 2n - 5",
                       F.f(2), 2 * n - 5))
    else:
        out.append(_na("codim0_planar_vertices", "2-complex in R^2, vertex form", "f_2 <= 2n - 5", "needs d = 2"))
    if d == 3:
        out.append(_ok("codim0_r3_vertices", "3-complex in R^3, vertex form", "f_3 <= n(n-3)/2 - 1",
                       F.f(3), Fraction(n * (n - 3), 2) - 1))
    else:
        out.append(_na("codim0_r3_vertices", "3-complex in R^3, vertex form", "f_3 <= n(n-3)/2 - 1",
                       "needs d = 3"))
    return out


# batteries -------------------------------------------------------------------

@dataclass
class ObstructionVerdict:
    target: Target
    verdict: Verdict
    reports: list[InequalityReport]
    torsion: TorsionCertificate | None = None
    torsion_checked: bool = False
    girth: GirthValue | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def violated(self) -> list[InequalityReport]:
        return [r for r in self.reports if r.violated and not r.sanity]

    @property
    def sanity_failures(self) -> list[InequalityReport]:
        return [r for r in self.reports if r.violated and r.sanity]

    def report(self, name: str) -> InequalityReport:
        for r in self.reports:
            if r.name == name:
                return r
        raise KeyError(name)


def _torsion(cx: SimplicialComplex) -> TorsionCertificate | None:
    factors = integral_torsion(cx, cx.dim - 1)
    if not factors:
        return None
    return TorsionCertificate(cx.dim - 1, tuple(factors), f"not topologically embeddable into S^{cx.dim + 1}")


def battery(cx: SimplicialComplex, target: Target | str = Target.CODIM1, budget: SearchBudget = DEFAULT_BUDGET,
            short_circuit: bool = True, girth_override: GirthValue | None = None) -> ObstructionVerdict:
    """Run every check for ``target`` and aggregate a verdict.

    Checks run cheapest first (f-vector, then Betti, then torsion, then
    girth). With ``short_circuit`` the exact girth search is skipped once a
    violation is already established, and the girth checks use the verified
    lower bound instead.
    """
    target = Target(target)
    if cx.dim < 1:
        raise ValueError("obstruction battery needs dimension >= 1")
    F = Facts(cx, budget, girth_override)
    d = cx.dim
    reports: list[InequalityReport] = []
    torsion = None
    checked = False

    if target is Target.SPHERE:
        if d >= 2:
            torsion, checked = _torsion(cx), True
        verdict = Verdict.OBSTRUCTED if torsion else Verdict.NO_OBSTRUCTION
        return ObstructionVerdict(target, verdict, reports, torsion, checked)

    reports += [check_sperner(cx, i, j, F) for i in range(1, d + 1) for j in range(i)]

    if target is Target.CODIM0:
        reports += check_codim0(cx, F)
        verdict = Verdict.OBSTRUCTED if any(r.violated and not r.sanity for r in reports) else Verdict.NO_OBSTRUCTION
        return ObstructionVerdict(target, verdict, reports)

    reports.append(check_grunbaum(cx, F))
    reports.append(check_ridge_bound(cx, F))
    reports += check_balanced(cx, F)
    reports += check_lowdim_codim1(cx, F)
    if d >= 2:
        torsion, checked = _torsion(cx), True

    already = torsion is not None or any(r.violated and not r.sanity for r in reports)
    notes = []
    if short_circuit and already and not F.girth_computed and F.top_betti >= 1:
        F.use_girth_lower_bound()
        notes.append("exact girth search skipped: a cheaper check already obstructs")
    girth_reports = [check_girth_betti(cx, F)]
    girth_reports += [check_alternating_bound(cx, k, F) for k in range(1, d + 1, 2)]
    girth_reports.append(check_chi_bound(cx, F))
    reports = girth_reports + reports

    obstructed = torsion is not None or any(r.violated and not r.sanity for r in reports)
    verdict = Verdict.OBSTRUCTED if obstructed else Verdict.NO_OBSTRUCTION
    g = F.girth() if F.top_betti >= 1 else None
    return ObstructionVerdict(target, verdict, reports, torsion, checked, g, notes)


def skeleton_of_manifold(manifold: SimplicialComplex, budget: SearchBudget = DEFAULT_BUDGET,
                         short_circuit: bool = True) -> ObstructionVerdict:
    """Codim-1 battery on the d-skeleton of a closed (d+1)-pseudomanifold.

    When the pseudomanifold has a nonzero d-th Betti number the skeleton
    cannot PL embed into R^{d+1}, and the girth-Betti check shows it.
    """
    if manifold.dim < 2:
        raise ValueError("need a closed pseudomanifold of dimension >= 2")
    if manifold.ridge_regularity() is not RidgeRegularity.CLOSED:
        raise ValueError("input is not a closed pseudomanifold")
    d = manifold.dim - 1
    result = battery(manifold.skeleton(d), Target.CODIM1, budget, short_circuit)
    b = betti_z2(manifold, d)
    result.notes.append(f"pseudomanifold beta_{d} = {b}; "
                        + ("the skeleton is expected to be obstructed" if b >= 1 else "no obstruction is implied"))
    return result
