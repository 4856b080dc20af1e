"""Named families of small complexes and the ``gen:family:p1:p2`` mini-language."""

from __future__ import annotations

from itertools import combinations, product
from typing import Callable

from .complex import SimplicialComplex, cone, from_facets, suspension


def _numbered(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)]


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def complete_graph(n: int) -> SimplicialComplex:
    _need(n >= 1, "complete_graph needs n >= 1")
    return simplex_skeleton(n, 1) if n > 1 else simplex(0)


def complete_bipartite(a: int, b: int) -> SimplicialComplex:
    _need(a >= 1 and b >= 1, "complete_bipartite needs a, b >= 1")
    return from_facets([[f"a{i}", f"b{j}"] for i in range(1, a + 1) for j in range(1, b + 1)])


def cycle(n: int) -> SimplicialComplex:
    _need(n >= 3, "cycle needs n >= 3")
    lab = _numbered(n)
    return from_facets([[lab[i], lab[(i + 1) % n]] for i in range(n)])


def path(n: int) -> SimplicialComplex:
    """Path graph on n vertices (a tree)."""
    _need(n >= 2, "path needs n >= 2")
    lab = _numbered(n)
    return from_facets([[lab[i], lab[i + 1]] for i in range(n - 1)])


def wheel(n: int) -> SimplicialComplex:
    """Hub joined to an n-cycle rim."""
    _need(n >= 3, "wheel needs a rim of n >= 3")
    rim = cycle(n)
    return from_facets(rim.facet_labels() + [["h", str(i)] for i in range(1, n + 1)])


def hypercube_graph(k: int) -> SimplicialComplex:
    _need(k >= 1, "hypercube_graph needs k >= 1")
    words = ["".join(bits) for bits in product("01", repeat=k)]
    edges = [[u, v] for u, v in combinations(words, 2) if sum(x != y for x, y in zip(u, v)) == 1]
    return from_facets(edges)


def simplex(k: int) -> SimplicialComplex:
    """The full k-simplex on vertices 1..k+1."""
    _need(k >= 0, "simplex needs k >= 0")
    return from_facets([_numbered(k + 1)])


def simplex_skeleton(n: int, k: int) -> SimplicialComplex:
    """All (k+1)-subsets of n vertices; ``simplex_skeleton(2d+3, d)`` is van Kampen-Flores."""
    _need(n >= 1 and 0 <= k < n, "simplex_skeleton needs 0 <= k < n")
    return from_facets([list(c) for c in combinations(_numbered(n), k + 1)])


def simplex_boundary(k: int) -> SimplicialComplex:
    """Boundary of the k-simplex, a (k-1)-sphere on k+1 vertices."""
    _need(k >= 1, "simplex_boundary needs k >= 1")
    return simplex_skeleton(k + 1, k - 1)


def cross_polytope_boundary(m: int) -> SimplicialComplex:
    """Boundary of the m-dimensional cross-polytope: one vertex from each antipodal pair."""
    _need(m >= 1, "cross_polytope_boundary needs m >= 1")
    pairs = [(f"+{i}", f"-{i}") for i in range(1, m + 1)]
    return from_facets([list(choice) for choice in product(*pairs)])


def moebius5() -> SimplicialComplex:
    """Five-vertex Moebius strip: triangles {i, i+1, i+2} mod 5."""
    lab = _numbered(5)
    return from_facets([[lab[i], lab[(i + 1) % 5], lab[(i + 2) % 5]] for i in range(5)])


RP2_6_FACETS = [
    "1 2 3", "1 2 4", "1 3 5", "1 4 6", "1 5 6",
    "2 3 6", "2 4 5", "2 5 6", "3 4 5", "3 4 6",
]


def rp2_6() -> SimplicialComplex:
    """Six-vertex projective plane (antipodal quotient of the icosahedron)."""
    return from_facets([line.split() for line in RP2_6_FACETS])


def torus7() -> SimplicialComplex:
    """Seven-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    lab = _numbered(7)
    tri = []
    for i in range(7):
        tri.append([lab[i], lab[(i + 1) % 7], lab[(i + 3) % 7]])
        tri.append([lab[i], lab[(i + 2) % 7], lab[(i + 3) % 7]])
    return from_facets(tri)


FAMILIES: dict[str, tuple[int, Callable[..., SimplicialComplex]]] = {
    "complete_graph": (1, complete_graph),
    "complete_bipartite": (2, complete_bipartite),
    "cycle": (1, cycle),
    "path": (1, path),
    "wheel": (1, wheel),
    "hypercube_graph": (1, hypercube_graph),
    "simplex": (1, simplex),
    "simplex_skeleton": (2, simplex_skeleton),
    "simplex_boundary": (1, simplex_boundary),
    "cross_polytope_boundary": (1, cross_polytope_boundary),
    "moebius5": (0, moebius5),
    "rp2_6": (0, rp2_6),
    "torus7": (0, torus7),
}
WRAPPERS = {"suspension": suspension, "suspension_of": suspension, "cone": cone}


def generate(family: str, *params) -> SimplicialComplex:
    """Build a named family member; ``generate("suspension", "complete_bipartite", 3, 3)`` nests."""
    if family in WRAPPERS:
        if not params:
            raise ValueError(f"{family} needs an inner family")
        return WRAPPERS[family](generate(*params))
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; known: {', '.join(sorted(FAMILIES) + sorted(WRAPPERS))}")
    arity, build = FAMILIES[family]
    if len(params) != arity:
        raise ValueError(f"{family} takes {arity} parameter(s), got {len(params)}")
    try:
        ints = [int(p) for p in params]
    except (TypeError, ValueError):
        raise ValueError(f"{family} parameters must be integers: {params}") from None
    return build(*ints)


def suspension_of(family: str, *params) -> SimplicialComplex:
    """Suspension of a generated complex, e.g. ``suspension_of("complete_bipartite", 8, 8)``."""
    return suspension(generate(family, *params))


def parse_gen_spec(spec: str) -> SimplicialComplex:
    """``gen:family:p1:p2`` (``gen:`` prefix optional)."""
    parts = spec.split(":")
    if parts and parts[0] == "gen":
        parts = parts[1:]
    if not parts or not parts[0]:
        raise ValueError(f"empty generator spec {spec!r}")
    return generate(*parts)


def is_gen_spec(text: str) -> bool:
    return text.startswith("gen:")
