import os

import pytest
from hypothesis import HealthCheck, settings

from embedcert import _backend
from embedcert import generators as gen

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(params=_backend.available(), ids=lambda m: m.NAME)
def backend(request):
    """Run the test once per importable kernel backend."""
    with _backend.use(request.param) as k:
        yield k


def corpus():
    """Named generator outputs used by corpus-wide properties (fresh objects each call)."""
    return {
        "K4": gen.complete_graph(4),
        "K5": gen.complete_graph(5),
        "K6": gen.complete_graph(6),
        "K7": gen.complete_graph(7),
        "K33": gen.complete_bipartite(3, 3),
        "K34": gen.complete_bipartite(3, 4),
        "C4": gen.cycle(4),
        "C7": gen.cycle(7),
        "P5": gen.path(5),
        "W5": gen.wheel(5),
        "Q3": gen.hypercube_graph(3),
        "simplex2": gen.simplex(2),
        "simplex3": gen.simplex(3),
        "bd_simplex2": gen.simplex_boundary(2),
        "bd_simplex3": gen.simplex_boundary(3),
        "bd_simplex4": gen.simplex_boundary(4),
        "octahedron": gen.cross_polytope_boundary(3),
        "cross4": gen.cross_polytope_boundary(4),
        "vkf1": gen.simplex_skeleton(5, 1),
        "vkf2": gen.simplex_skeleton(7, 2),
        "skel_6_2": gen.simplex_skeleton(6, 2),
        "moebius5": gen.moebius5(),
        "rp2_6": gen.rp2_6(),
        "torus7": gen.torus7(),
        "susp_K33": gen.suspension_of("complete_bipartite", 3, 3),
        "susp_rp2": gen.suspension_of("rp2_6"),
        "cone_K4": gen.cone(gen.complete_graph(4)),
    }


CORPUS_NAMES = sorted(corpus())


@pytest.fixture(params=CORPUS_NAMES)
def corpus_item(request):
    return request.param, corpus()[request.param]


# acceptance reporting ---------------------------------------------------------

class AcceptanceLedger:
    """Collects per-criterion outcomes; printed once at the end of the run."""

    def __init__(self):
        self.parts: dict[int, list[tuple[str, str, str]]] = {}

    def record(self, criterion: int, part: str, status: str, detail: str) -> None:
        self.parts.setdefault(criterion, []).append((part, status, detail))

    def check(self, criterion: int, part: str, ok: bool, detail: str) -> None:
        self.record(criterion, part, "PASS" if ok else "FAIL", detail)
        assert ok, f"criterion {criterion} ({part}): {detail}"

    def lines(self) -> list[str]:
        out = []
        for c in sorted(self.parts):
            statuses = {s for _, s, _ in self.parts[c]}
            overall = "FAIL" if "FAIL" in statuses else ("SKIP" if statuses == {"SKIP"} else "PASS")
            detail = "; ".join(f"{p}: {s} ({d})" for p, s, d in self.parts[c])
            out.append(f"criterion {c:>2}: {overall}  {detail}")
        return out


ACCEPTANCE = AcceptanceLedger()


@pytest.fixture
def acceptance():
    return ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    lines = ACCEPTANCE.lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
