"""Finite abstract simplicial complexes stored by their facets.

A complex is a vertex count plus the antichain of inclusion-maximal simplexes;
all lower faces are derived on demand.  The burning configuration space of a
graph is the complex generated by the source sets of all its burnings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .burning import SizeGuardExceeded, enumerate_burnings
from .graphs import Graph

Simplex = tuple[int, ...]


class ComplexError(ValueError):
    """Invalid simplicial complex data."""


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_count: int
    facets: frozenset[Simplex]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ComplexError("complex needs at least one vertex")
        covered: set[int] = set()
        for f in self.facets:
            if not f:
                raise ComplexError("empty facet")
            if list(f) != sorted(set(f)):
                raise ComplexError(f"facet {f} not sorted and duplicate-free")
            if f[0] < 0 or f[-1] >= self.vertex_count:
                raise ComplexError(f"facet {f} has out-of-range vertices")
            covered.update(f)
        if covered != set(range(self.vertex_count)):
            raise ComplexError("every vertex must lie in some facet")
        facet_sets = [set(f) for f in self.facets]
        for a, b in combinations(facet_sets, 2):
            if a <= b or b <= a:
                raise ComplexError("facets must form an antichain")

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def sorted_facets(self) -> list[Simplex]:
        return sorted(self.facets, key=lambda f: (len(f), f))

    def has_face(self, simplex: Sequence[int]) -> bool:
        s = set(simplex)
        return any(s <= set(f) for f in self.facets)

    def to_record(self) -> dict:
        return {"vertex_count": self.vertex_count,
                "facets": sorted(list(f) for f in self.facets)}


def from_generators(vertex_count: int, simplexes: Iterable[Sequence[int]]) -> SimplicialComplex:
    """The complex generated by arbitrary simplexes; non-maximal ones are absorbed."""
    sets = {tuple(sorted(set(s))) for s in simplexes}
    maximal = {s for s in sets
               if not any(s != t and set(s) <= set(t) for t in sets)}
    return SimplicialComplex(vertex_count, frozenset(maximal))


def configuration_space(g: Graph) -> SimplicialComplex:
    """The complex on the graph's vertices generated by all burning source sets."""
    return from_generators(
        g.vertex_count, [b.sources for b in enumerate_burnings(g)])


@lru_cache(maxsize=None)
def faces(c: SimplicialComplex, q: int) -> tuple[Simplex, ...]:
    """All q-dimensional faces in lexicographic order."""
    if q < 0:
        raise ComplexError("dimension must be >= 0")
    out: set[Simplex] = set()
    for f in c.facets:
        if len(f) >= q + 1:
            out.update(combinations(f, q + 1))
    return tuple(sorted(out))


def skeleton(c: SimplicialComplex, n: int) -> SimplicialComplex:
    """The subcomplex of faces of dimension at most n."""
    if n < 0:
        raise ComplexError("dimension must be >= 0")
    generators: set[Simplex] = set()
    for f in c.facets:
        if len(f) <= n + 1:
            generators.add(f)
        else:
            generators.update(combinations(f, n + 1))
    return SimplicialComplex(c.vertex_count, frozenset(generators))


def one_skeleton_graph(c: SimplicialComplex) -> Graph:
    """The 1-skeleton read as a graph on the same vertices."""
    return Graph(c.vertex_count, frozenset(faces(c, 1)))


def graph_as_complex(g: Graph) -> SimplicialComplex:
    """A graph viewed as a one-dimensional complex (isolated vertices allowed)."""
    return from_generators(
        g.vertex_count, list(g.edges) + [(v,) for v in g.vertices])


def cone(c: SimplicialComplex) -> SimplicialComplex:
    """Add an apex vertex joined to every simplex; apex index = old vertex count."""
    apex = c.vertex_count
    facets = frozenset(f + (apex,) for f in c.facets)
    return SimplicialComplex(c.vertex_count + 1, facets)


def suspension(c: SimplicialComplex) -> SimplicialComplex:
    """Add two poles, each joined to every simplex."""
    south, north = c.vertex_count, c.vertex_count + 1
    facets = frozenset(f + (p,) for f in c.facets for p in (south, north))
    return SimplicialComplex(c.vertex_count + 2, facets)


# ---------------------------------------------------------------------------
# Simplicial maps


class SimplicialMapError(ValueError):
    """A vertex function whose image of some facet is not a face."""

    def __init__(self, message: str, facet: Simplex | None = None):
        super().__init__(message)
        self.facet = facet


@dataclass(frozen=True)
class SimplicialMap:
    domain: SimplicialComplex
    codomain: SimplicialComplex
    vertex_fn: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.vertex_fn[v]

    def image_simplex(self, simplex: Sequence[int]) -> Simplex:
        return tuple(sorted({self.vertex_fn[v] for v in simplex}))


def validate_simplicial_map(vertex_fn: Sequence[int], c1: SimplicialComplex,
                            c2: SimplicialComplex) -> SimplicialMap:
    """Accept iff the image of every facet (hence every face) is a face of c2."""
    fn = tuple(vertex_fn)
    if len(fn) != c1.vertex_count:
        raise SimplicialMapError("vertex function must be total on the domain")
    for image in fn:
        if not 0 <= image < c2.vertex_count:
            raise SimplicialMapError(f"image vertex {image} out of range")
    for f in sorted(c1.facets):
        image = tuple(sorted({fn[v] for v in f}))
        if not c2.has_face(image):
            raise SimplicialMapError(
                f"facet {f} maps onto {image}, which is not a face", facet=f)
    return SimplicialMap(c1, c2, fn)


def identity_simplicial_map(c: SimplicialComplex) -> SimplicialMap:
    return validate_simplicial_map(tuple(range(c.vertex_count)), c, c)


def compose_simplicial_maps(second: SimplicialMap, first: SimplicialMap) -> SimplicialMap:
    if first.codomain != second.domain:
        raise SimplicialMapError("simplicial maps do not compose")
    fn = tuple(second.vertex_fn[first.vertex_fn[v]]
               for v in range(first.domain.vertex_count))
    return validate_simplicial_map(fn, first.domain, second.codomain)


# ---------------------------------------------------------------------------
# Isomorphism


def _vertex_signature(c: SimplicialComplex) -> list[tuple[tuple[int, ...], int]]:
    """Per-vertex multiset of incident facet sizes, used to prune the search."""
    incident: list[list[int]] = [[] for _ in range(c.vertex_count)]
    for f in c.facets:
        for v in f:
            incident[v].append(len(f))
    return [(tuple(sorted(sizes)), v) for v, sizes in enumerate(incident)]


def are_isomorphic(c1: SimplicialComplex, c2: SimplicialComplex,
                   max_vertices: int = 12) -> tuple[int, ...] | None:
    """Search for a vertex bijection carrying facets onto facets.

    Returns the bijection as a tuple (image of each c1 vertex) or None.
    """
    if c1.vertex_count > max_vertices or c2.vertex_count > max_vertices:
        raise SizeGuardExceeded(
            f"complexes have {c1.vertex_count}/{c2.vertex_count} vertices; "
            f"cap is {max_vertices}")
    if c1.vertex_count != c2.vertex_count or len(c1.facets) != len(c2.facets):
        return None
    sizes1 = sorted(len(f) for f in c1.facets)
    sizes2 = sorted(len(f) for f in c2.facets)
    if sizes1 != sizes2:
        return None
    sig1 = _vertex_signature(c1)
    sig2 = _vertex_signature(c2)
    if sorted(s for s, _ in sig1) != sorted(s for s, _ in sig2):
        return None
    # Assign the most constrained vertices first: rarest signatures up front.
    order = [v for _, v in sorted(
        sig1, key=lambda item: (sum(1 for s, _ in sig1 if s == item[0]), item[0]))]
    candidates = {v: [w for s2, w in sig2 if s2 == s]
                  for s, v in sig1}
    target_facets = set(c2.facets)
    facets_by_vertex: list[list[Simplex]] = [[] for _ in range(c1.vertex_count)]
    for f in c1.facets:
        for v in f:
            facets_by_vertex[v].append(f)

    assignment: dict[int, int] = {}
    used: set[int] = set()

    def consistent(v: int) -> bool:
        # Every fully-mapped facet through v must land on a facet of c2.
        for f in facets_by_vertex[v]:
            if all(u in assignment for u in f):
                image = tuple(sorted(assignment[u] for u in f))
                if image not in target_facets:
                    return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in candidates[v]:
            if w in used:
                continue
            assignment[v] = w
            used.add(w)
            if consistent(v) and search(i + 1):
                return True
            del assignment[v]
            used.discard(w)
        return False

    if search(0):
        return tuple(assignment[v] for v in range(c1.vertex_count))
    return None
