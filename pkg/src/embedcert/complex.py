"""Finite abstract simplicial complexes stored as facet lists.

Vertices are dense ids ``0..n-1`` with unique string labels. A simplex is a
strictly increasing tuple of ids. Every face list is built once, at
construction, so a complex is immutable and safe to share between threads.
"""

from __future__ import annotations

import hashlib
import threading
from enum import Enum
from itertools import combinations, permutations
from typing import Callable, Iterable, Sequence, TypeVar

Simplex = tuple[int, ...]
T = TypeVar("T")


class InputError(ValueError):
    """Malformed facet data (reported with its line number when known)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class RidgeRegularity(str, Enum):
    CLOSED = "closed"
    WITH_BOUNDARY = "with-boundary"
    NON_PSEUDOMANIFOLD = "non-pseudomanifold"


class SimplicialComplex:
    """An abstract simplicial complex given by its facets.

    ``facets`` are the inclusion-maximal simplices, sorted. ``faces(k)`` is
    the sorted list of all k-faces of the downward closure.
    """

    def __init__(self, facets: Iterable[Sequence[int]], labels: Sequence[str]):
        self.labels: tuple[str, ...] = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("vertex labels must be unique")
        n = len(self.labels)
        cleaned = set()
        for f in facets:
            s = tuple(sorted(f))
            if not s:
                continue
            if len(set(s)) != len(s):
                raise ValueError(f"repeated vertex in simplex {s}")
            if s[0] < 0 or s[-1] >= n:
                raise ValueError(f"vertex id out of range in {s}")
            cleaned.add(s)
        cleaned.update((v,) for v in range(n))
        self.facets: tuple[Simplex, ...] = tuple(sorted(_maximal(cleaned), key=lambda s: (len(s), s)))
        self.dim: int = max((len(f) - 1 for f in self.facets), default=-1)

        layers: list[set[Simplex]] = [set() for _ in range(self.dim + 1)]
        for f in self.facets:
            for k in range(len(f)):
                layers[k].update(combinations(f, k + 1))
        self._faces: tuple[tuple[Simplex, ...], ...] = tuple(tuple(sorted(layer)) for layer in layers)
        self._index: tuple[dict[Simplex, int], ...] = tuple(
            {s: i for i, s in enumerate(layer)} for layer in self._faces
        )
        self._memo: dict = {}
        self._lock = threading.Lock()

    # basic accessors -----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    def faces(self, k: int) -> tuple[Simplex, ...]:
        if k == -1:
            return ((),)
        if 0 <= k <= self.dim:
            return self._faces[k]
        return ()

    def face_index(self, k: int) -> dict[Simplex, int]:
        if k == -1:
            return {(): 0}
        if 0 <= k <= self.dim:
            return self._index[k]
        return {}

    def f(self, k: int) -> int:
        """Number of k-faces; ``f(-1) == 1`` for the empty face."""
        return len(self.faces(k))

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self._faces)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * fk for k, fk in enumerate(self.f_vector))

    def facet_labels(self) -> list[list[str]]:
        return [[self.labels[v] for v in f] for f in self.facets]

    def memo(self, key, compute: Callable[[], T]) -> T:
        """Per-complex cache for derived data (ranks, Betti numbers, ...)."""
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        value = compute()
        with self._lock:
            return self._memo.setdefault(key, value)

    def digest(self) -> str:
        """SHA-256 of the canonical facet list (labels sorted within and across facets)."""
        lines = sorted(" ".join(sorted(f)) for f in self.facet_labels())
        return hashlib.sha256("\n".join(lines).encode()).hexdigest()

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.labels == other.labels and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.labels, self.facets))

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dim}, f={self.f_vector})"

    # predicates ----------------------------------------------------------

    def is_pure(self) -> bool:
        return all(len(f) == self.dim + 1 for f in self.facets)

    def ridge_degrees(self) -> dict[Simplex, int]:
        """How many facets of top dimension contain each (d-1)-face."""
        deg = {r: 0 for r in self.faces(self.dim - 1)}
        for f in self.facets:
            if len(f) == self.dim + 1:
                for r in combinations(f, self.dim):
                    deg[r] += 1
        return deg

    def ridge_regularity(self) -> RidgeRegularity:
        if self.dim < 0 or not self.is_pure():
            return RidgeRegularity.NON_PSEUDOMANIFOLD
        degrees = self.ridge_degrees().values()
        if all(c == 2 for c in degrees):
            return RidgeRegularity.CLOSED
        if all(c <= 2 for c in degrees):
            return RidgeRegularity.WITH_BOUNDARY
        return RidgeRegularity.NON_PSEUDOMANIFOLD

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.faces(1):
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def components(self) -> list[list[int]]:
        adj = self.adjacency()
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def balanced_coloring(self) -> list[int] | None:
        """Proper (d+1)-coloring of the 1-skeleton, or None if there is none.

        Exact backtracking: vertices in order of decreasing degree (ties by
        id), lowest admissible color first. A vertex may open at most one new
        color beyond those already used, which prunes color permutations
        without changing which coloring is found first.
        """
        if self.dim < 1:
            raise ValueError("balanced coloring needs dimension >= 1")
        return self.memo("balanced_coloring", lambda: _color(self.adjacency(), self.dim + 1))

    def is_balanced(self) -> bool:
        return self.balanced_coloring() is not None

    # constructions -------------------------------------------------------

    def skeleton(self, k: int) -> SimplicialComplex:
        """All faces of dimension <= k; the labels and ids are kept."""
        if not 0 <= k <= self.dim:
            raise ValueError(f"skeleton dimension {k} out of range 0..{self.dim}")
        if k == self.dim:
            return self
        facets = list(self.faces(k)) + [f for f in self.facets if len(f) <= k]
        return SimplicialComplex(facets, self.labels)

    def relabel(self, labels: Sequence[str]) -> SimplicialComplex:
        return SimplicialComplex(self.facets, labels)


def _maximal(simplices: set[Simplex]) -> list[Simplex]:
    by_vertex: dict[int, list[frozenset]] = {}
    out = []
    for s in sorted(simplices, key=len, reverse=True):
        fs = frozenset(s)
        candidates = min((by_vertex.get(v, []) for v in s), key=len)
        if any(fs < k for k in candidates):
            continue
        for v in s:
            by_vertex.setdefault(v, []).append(fs)
        out.append(s)
    return out


def _color(adj: list[set[int]], ncolors: int) -> list[int] | None:
    n = len(adj)
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    color = [-1] * n
    used = [0] * (n + 1)  # colors opened before position i
    pos = 0
    while 0 <= pos < n:
        v = order[pos]
        taken = {color[u] for u in adj[v] if color[u] >= 0}
        c = color[v] + 1
        limit = min(used[pos] + 1, ncolors)
        while c < limit and c in taken:
            c += 1
        if c < limit:
            color[v] = c
            used[pos + 1] = max(used[pos], c + 1)
            pos += 1
        else:
            color[v] = -1
            pos -= 1
    return color if pos == n else None


# construction from data ---------------------------------------------------


def from_facets(facet_lines: Sequence[Sequence[str]], line_numbers: Sequence[int] | None = None) -> SimplicialComplex:
    """Build a complex from facet token lists.

    Ids follow first appearance; faces contained in other given faces are
    dropped. A repeated token inside one facet is an ``InputError`` that
    names the offending line.
    """
    ids: dict[str, int] = {}
    facets = []
    for i, tokens in enumerate(facet_lines):
        line = line_numbers[i] if line_numbers is not None else i + 1
        if not tokens:
            raise InputError("empty facet", line)
        if len(set(tokens)) != len(tokens):
            dup = next(t for t in tokens if tokens.count(t) > 1)
            raise InputError(f"vertex {dup!r} repeated within a facet", line)
        facet = []
        for t in tokens:
            if t not in ids:
                ids[t] = len(ids)
            facet.append(ids[t])
        facets.append(facet)
    return SimplicialComplex(facets, list(ids))


def parse_facets(text: str) -> SimplicialComplex:
    """Parse the facet file format: one facet per line, ``#`` comments."""
    lines, numbers = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            lines.append(tokens)
            numbers.append(lineno)
    return from_facets(lines, numbers)


def read_facets(path: str) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_facets(fh.read())


def format_facets(cx: SimplicialComplex, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.extend(" ".join(f) for f in cx.facet_labels())
    return "\n".join(out) + "\n"


# standard constructions ---------------------------------------------------


def _fresh(base: str, taken: set[str]) -> str:
    label, i = base, 0
    while label in taken:
        i += 1
        label = f"{base}{i}"
    taken.add(label)
    return label


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Facets are unions of one facet from each side; labels must be disjoint."""
    clash = set(a.labels) & set(b.labels)
    if clash:
        raise ValueError(f"join needs disjoint labels; shared: {sorted(clash)[:5]}")
    if not a.facets:
        return b
    if not b.facets:
        return a
    off = a.n
    facets = [fa + tuple(v + off for v in fb) for fa in a.facets for fb in b.facets]
    return SimplicialComplex(facets, a.labels + b.labels)


def points(labels: Sequence[str]) -> SimplicialComplex:
    return SimplicialComplex([(i,) for i in range(len(labels))], labels)


def cone(cx: SimplicialComplex, apex: str = "c") -> SimplicialComplex:
    return join(cx, points([_fresh(apex, set(cx.labels))]))


def suspension(cx: SimplicialComplex, north: str = "N", south: str = "S") -> SimplicialComplex:
    taken = set(cx.labels)
    return join(cx, points([_fresh(north, taken), _fresh(south, taken)]))


def barycentric_subdivision(cx: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the face poset.

    Vertices are the nonempty faces, labelled by their vertex labels joined
    with commas. Facets are the maximal chains, i.e. one chain per ordering
    of the vertices of each facet.
    """
    faces = [s for k in range(cx.dim + 1) for s in cx.faces(k)]
    ids = {s: i for i, s in enumerate(faces)}
    labels = [",".join(cx.labels[v] for v in s) for s in faces]
    chains = []
    for f in cx.facets:
        for perm in permutations(f):
            chains.append(tuple(ids[tuple(sorted(perm[: j + 1]))] for j in range(len(perm))))
    return SimplicialComplex(chains, labels)
