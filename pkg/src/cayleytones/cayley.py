"""Cayley graphs of Z_n: construction, BFS metric, and isometry tests."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Mapping, Union

from .modular import Automorphism, ModElement, ModRing

# All-pairs distance tables stay small up to this modulus; far beyond musical use.
MAX_MODULUS = 4096


class UnreachableVertexError(ValueError):
    """Raised when no path exists between two queried vertices."""


class GeneratorSetError(ValueError):
    """Raised when an operation requires a symmetric or generating set."""


@dataclass(frozen=True)
class GeneratorSet:
    """Nonzero residues used as edge steps; stored sorted and deduplicated."""

    ring: ModRing
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.ring.n
        reduced = [e % n for e in self.elements]
        if any(e == 0 for e in reduced):
            raise ValueError("generator sets must not contain 0")
        object.__setattr__(self, "elements", tuple(sorted(set(reduced))))

    @property
    def is_symmetric(self) -> bool:
        members = set(self.elements)
        return all((self.ring.n - s) % self.ring.n in members for s in members)

    def symmetrized(self) -> "GeneratorSet":
        """This set joined with the negation of each element."""
        n = self.ring.n
        extra = [(n - s) % n for s in self.elements]
        return GeneratorSet(self.ring, self.elements + tuple(extra))

    def is_generating(self) -> bool:
        """True iff the closure of {0} under +-steps covers all of Z_n."""
        n = self.ring.n
        steps = set(self.symmetrized().elements)
        seen = {0}
        frontier = deque([0])
        while frontier:
            v = frontier.popleft()
            for w in steps:
                u = (v + w) % n
                if u not in seen:
                    seen.add(u)
                    frontier.append(u)
        return len(seen) == n

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class Path:
    """A walk along labeled edges; length is the number of steps taken."""

    vertices: tuple[int, ...]
    steps: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.steps)


class CayleyGraph:
    """Graph on Z_n with an edge g -> g+w per step w.

    An unoriented graph is the oriented graph over the symmetrized step
    set; dropping arrows and adding inverse steps are the same operation.
    Immutable after construction except the distance cache, which is
    filled idempotently (safe for concurrent readers).
    """

    def __init__(self, generators: GeneratorSet, oriented: bool = True):
        if generators.ring.n > MAX_MODULUS:
            raise ValueError(f"modulus above supported maximum {MAX_MODULUS}")
        self.ring = generators.ring
        self.generators = generators
        self.oriented = oriented
        self._steps = (
            generators.elements if oriented else generators.symmetrized().elements
        )
        self._rows: dict[int, list[int]] = {}
        self._unoriented: "CayleyGraph | None" = None if oriented else self

    @property
    def steps(self) -> tuple[int, ...]:
        """The effective step set (symmetrized when unoriented)."""
        return self._steps

    def edges(self) -> list[tuple[int, int, int]]:
        """All directed edges (g, g+w, w) over the effective step set."""
        n = self.ring.n
        return [(g, (g + w) % n, w) for g in range(n) for w in self._steps]

    def unoriented_view(self) -> "CayleyGraph":
        if self._unoriented is None:
            self._unoriented = CayleyGraph(self.generators, oriented=False)
        return self._unoriented

    def _value(self, x: Union[ModElement, int]) -> int:
        if isinstance(x, ModElement):
            if x.ring != self.ring:
                raise ValueError(f"vertex from Z_{x.ring.n} queried in Z_{self.ring.n}")
            return x.value
        return x % self.ring.n

    def _row(self, source: int) -> list[int]:
        row = self._rows.get(source)
        if row is None:
            n = self.ring.n
            row = [-1] * n
            row[source] = 0
            frontier = deque([source])
            while frontier:
                v = frontier.popleft()
                for w in self._steps:
                    u = (v + w) % n
                    if row[u] < 0:
                        row[u] = row[v] + 1
                        frontier.append(u)
            self._rows[source] = row
        return row

    def distance(self, a: Union[ModElement, int], b: Union[ModElement, int]) -> int:
        """Shortest unoriented path length; the graph metric d(a, b)."""
        if self.oriented:
            return self.unoriented_view().distance(a, b)
        a, b = self._value(a), self._value(b)
        d = self._row(a)[b]
        if d < 0:
            raise UnreachableVertexError(f"no path from {a} to {b}")
        return d

    def oriented_path_length(
        self, a: Union[ModElement, int], b: Union[ModElement, int]
    ) -> int:
        """Shortest directed path length; may be asymmetric."""
        if not self.oriented:
            raise ValueError("oriented path length requires an oriented graph")
        a, b = self._value(a), self._value(b)
        d = self._row(a)[b]
        if d < 0:
            raise UnreachableVertexError(f"no oriented path from {a} to {b}")
        return d

    def shortest_path(
        self, a: Union[ModElement, int], b: Union[ModElement, int]
    ) -> Path:
        """One shortest path from a to b with its step labels."""
        a, b = self._value(a), self._value(b)
        n = self.ring.n
        parent: dict[int, tuple[int, int]] = {}
        seen = {a}
        frontier = deque([a])
        while frontier and b not in parent and b != a:
            v = frontier.popleft()
            for w in self._steps:
                u = (v + w) % n
                if u not in seen:
                    seen.add(u)
                    parent[u] = (v, w)
                    frontier.append(u)
        if b != a and b not in parent:
            raise UnreachableVertexError(f"no path from {a} to {b}")
        vertices = [b]
        steps = []
        while vertices[-1] != a:
            v, w = parent[vertices[-1]]
            vertices.append(v)
            steps.append(w)
        return Path(tuple(reversed(vertices)), tuple(reversed(steps)))


def distance(
    G: CayleyGraph, a: Union[ModElement, int], b: Union[ModElement, int]
) -> int:
    """The graph metric d(a, b) on the unoriented view of G."""
    return G.distance(a, b)


def oriented_path_length(
    G: CayleyGraph, a: Union[ModElement, int], b: Union[ModElement, int]
) -> int:
    """Directed BFS length from a to b."""
    return G.oriented_path_length(a, b)


def _as_function(f) -> Callable[[int], int]:
    if isinstance(f, Mapping):
        return lambda x: f[x]
    return f


def is_isometry_bruteforce(G: CayleyGraph, f) -> bool:
    """Check d(x, y) = d(f(x), f(y)) over all vertex pairs.

    f may be any callable or mapping on residues; the graph is queried
    through its unoriented view.
    """
    graph = G.unoriented_view()
    n = graph.ring.n
    func = _as_function(f)
    image = [func(x) for x in range(n)]
    if any(not isinstance(y, int) or not 0 <= y < n for y in image):
        raise ValueError("map must send residues to residues")
    for x in range(n):
        row = graph._row(x)
        frow = graph._row(image[x])
        for y in range(x + 1, n):
            if row[y] != frow[image[y]]:
                return False
    return True


def is_isometry_by_generators(f: Automorphism, S: GeneratorSet) -> bool:
    """Isometry test via the criterion f(S) = S.

    Valid only for symmetric generating sets, which is exactly when the
    criterion is equivalent to preserving the graph metric.
    """
    if f.ring != S.ring:
        raise ValueError("automorphism and generator set use different moduli")
    if not S.is_symmetric:
        raise GeneratorSetError("criterion requires a symmetric generator set")
    if not S.is_generating():
        raise GeneratorSetError("criterion requires a generating set")
    n = S.ring.n
    return {(f.multiplier * s) % n for s in S.elements} == set(S.elements)


def export_dot(G: CayleyGraph) -> str:
    """DOT text with vertices 0..n-1 and edges labeled '+w'."""
    n = G.ring.n
    lines = []
    if G.oriented:
        lines.append("digraph cayley {")
        for v in range(n):
            lines.append(f"  {v};")
        for v in range(n):
            for w in G.steps:
                lines.append(f'  {v} -> {(v + w) % n} [label="+{w}"];')
    else:
        lines.append("graph cayley {")
        for v in range(n):
            lines.append(f"  {v};")
        for w in G.steps:
            inverse = (n - w) % n
            if w > inverse:
                continue
            for v in range(n):
                u = (v + w) % n
                if w == inverse and v > u:
                    continue
                lines.append(f'  {v} -- {u} [label="+{w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
