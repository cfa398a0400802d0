"""Burning sequences, time functions, enumeration, and burning morphisms.

A burning is determined by its ordered source sequence (v_1, ..., v_k): the
j-th source ignites at step j and fire spreads one hop per step.  The burned
region before step j ignites is U_j; a sequence is admissible when each source
is unburned at its step and the final spread covers the whole graph.  The time
function lam(v) is the first step at which v burns.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .graphs import (
    Graph,
    GraphMap,
    Subgraph,
    classify,
    closed_neighborhood,
    distances,
    induced_union,
    path_graph,
    validate_graph_map,
)


class BurningError(ValueError):
    """A source sequence that is not a burning sequence."""


class SourceTooEarly(BurningError):
    """Source v_j already burned at its ignition step (v_j in U_j)."""

    def __init__(self, step: int, vertex: int):
        super().__init__(
            f"source {vertex} at step {step} is already burned (lies in U_{step})")
        self.step = step
        self.vertex = vertex


class IncompleteBurning(BurningError):
    """The sequence ends with unburned vertices (U_{k+1} is not the whole graph)."""

    def __init__(self, unburned: Sequence[int]):
        super().__init__(f"vertices {sorted(unburned)} never burn")
        self.unburned = tuple(sorted(unburned))


def check_sources(g: Graph, sources: Sequence[int]) -> tuple[int, ...]:
    s = tuple(sources)
    if not s:
        raise BurningError("source sequence must be non-empty")
    if len(set(s)) != len(s):
        raise BurningError("source sequence entries must be pairwise distinct")
    for v in s:
        if not 0 <= v < g.vertex_count:
            raise BurningError(f"source {v} out of range")
    return s


@dataclass(frozen=True)
class FiltrationState:
    """Burned region at one step: N_j, plus U_j (burned before step-j ignition)."""

    step: int
    burned_now: tuple[int, ...]
    burned_before_source: tuple[int, ...] | None


def filtration(g: Graph, sources: Sequence[int]) -> list[FiltrationState]:
    """Evaluate the neighborhood filtration literally as induced unions.

    Returns states for steps 1..k+1; makes no validity judgment.
    """
    s = check_sources(g, sources)
    k = len(s)
    states = []
    for j in range(1, k + 2):
        if j <= k:
            parts = [closed_neighborhood(g, s[i], j - 1 - i) for i in range(j)]
        else:
            parts = [closed_neighborhood(g, s[i], k - i) for i in range(k)]
        n_j = induced_union(parts).vertices
        u_j = None
        if j >= 2:
            parts = [closed_neighborhood(g, s[i], j - 1 - i) for i in range(j - 1)]
            u_j = induced_union(parts).vertices
        states.append(FiltrationState(j, n_j, u_j))
    return states


@dataclass(frozen=True)
class Burning:
    """A validated burning: sources, per-vertex burning times, end time."""

    graph: Graph
    sources: tuple[int, ...]
    times: tuple[int, ...]
    end_time: int

    def time(self, v: int) -> int:
        return self.times[v]

    def source_set(self) -> frozenset[int]:
        return frozenset(self.sources)

    def check_invariants(self) -> None:
        k = len(self.sources)
        for i, v in enumerate(self.sources, start=1):
            assert self.times[v] == i, f"source {v} burns at {self.times[v]} != {i}"
        assert set(self.times) == set(range(1, self.end_time + 1)), \
            "times not surjective onto 1..T"
        assert self.end_time in (k, k + 1), f"T={self.end_time} with k={k}"
        for v, w in self.graph.edges:
            assert abs(self.times[v] - self.times[w]) <= 1, \
                f"edge ({v},{w}) jumps more than one step"
        dist = distances(self.graph)
        for a, b in zip(self.sources, self.sources[1:]):
            assert dist[a][b] >= 2, f"consecutive sources {a},{b} adjacent"

    def to_record(self) -> dict:
        return {
            "sources": list(self.sources),
            "lambda": list(self.times),
            "end_time": self.end_time,
            "is_homomorphism": burning_map(self).is_homomorphism,
        }


def _burn_times(g: Graph, sources: tuple[int, ...]) -> list[float]:
    """best(v) = min_i (i + d(v_i, v)); equals lam(v) for valid sequences."""
    dist = distances(g)
    best = [float("inf")] * g.vertex_count
    for i, s in enumerate(sources, start=1):
        row = dist[s]
        for v in g.vertices:
            t = i + row[v]
            if t < best[v]:
                best[v] = t
    return best


def validate_burning(g: Graph, sources: Sequence[int]) -> Burning:
    """Accept exactly the admissible sequences and compute the time function."""
    s = check_sources(g, sources)
    dist = distances(g)
    k = len(s)
    for j in range(2, k + 1):
        # v_j lies in U_j iff some earlier source reaches it by step j.
        if any(i + dist[s[i - 1]][s[j - 1]] <= j for i in range(1, j)):
            raise SourceTooEarly(j, s[j - 1])
    best = _burn_times(g, s)
    unburned = [v for v in g.vertices if best[v] > k + 1]
    if unburned:
        raise IncompleteBurning(unburned)
    times = tuple(int(b) for b in best)
    return Burning(g, s, times, max(times))


def burning_map(b: Burning) -> GraphMap:
    """The graph map into the end-time path graph given by the time function.

    The path's vertices are 0-based internally: time t maps to path vertex t-1.
    """
    target = path_graph(b.end_time)
    return validate_graph_map(tuple(t - 1 for t in b.times), b.graph, target)


def _extend(g: Graph, prefix: list[int], best: list[float]) -> Iterator[tuple[int, ...]]:
    j = len(prefix)
    if all(t <= j + 1 for t in best):
        yield tuple(prefix)
        return
    dist = distances(g)
    for v in g.vertices:
        if best[v] <= j + 1:
            continue
        row = dist[v]
        new_best = [min(best[w], j + 1 + row[w]) for w in g.vertices]
        prefix.append(v)
        yield from _extend(g, prefix, new_best)
        prefix.pop()


def iter_burning_sequences(g: Graph) -> Iterator[tuple[int, ...]]:
    """All burning sequences in lexicographic order, lazily."""
    for v in g.vertices:
        dist = distances(g)
        best = [min(1 + dist[v][w], float("inf")) for w in g.vertices]
        yield from _extend(g, [v], best)


@lru_cache(maxsize=None)
def enumerate_burnings(g: Graph) -> tuple[Burning, ...]:
    """The complete list of burnings, lexicographic in the source sequences.

    A sequence is complete exactly when the burned region closes over the
    whole graph, so no burning sequence is a proper prefix of another.
    """
    out = []
    for s in iter_burning_sequences(g):
        b = validate_burning(g, s)
        out.append(b)
    return tuple(out)


def burning_number(g: Graph) -> int:
    return min(b.end_time for b in enumerate_burnings(g))


# ---------------------------------------------------------------------------
# Morphisms of burnings


class MorphismError(ValueError):
    """A graph map that fails the burning-morphism conditions."""


class PrefixMismatch(MorphismError):
    pass


class TauIllDefined(MorphismError):
    pass


class TauNotGraphMap(MorphismError):
    pass


@dataclass(frozen=True)
class BurningMorphism:
    """A graph map commuting with the time functions through a path-graph map."""

    graph_map: GraphMap
    domain: Burning
    codomain: Burning
    tau: tuple[int, ...]  # tau[t-1] is the image of time t, 1-based values
    tau_is_inclusion: bool

    def map_time(self, t: int) -> int:
        return self.tau[t - 1]


def validate_morphism(f: GraphMap, b_g: Burning, b_h: Burning) -> BurningMorphism:
    """Certify f as a morphism of burnings, deriving the time map tau."""
    if f.domain != b_g.graph or f.codomain != b_h.graph:
        raise MorphismError("graph map endpoints do not match the burnings")
    k, m = len(b_g.sources), len(b_h.sources)
    if k > m:
        raise PrefixMismatch(f"domain has more sources ({k}) than codomain ({m})")
    for i in range(k):
        if f(b_g.sources[i]) != b_h.sources[i]:
            raise PrefixMismatch(
                f"source {i + 1} maps to {f(b_g.sources[i])}, "
                f"expected {b_h.sources[i]}")
    # tau(t) := time of f(v) for any v burning at time t; the time function is
    # surjective, so this pins tau completely once it is well defined.
    tau: list[int | None] = [None] * b_g.end_time
    for v in b_g.graph.vertices:
        t = b_g.time(v)
        image_t = b_h.time(f(v))
        if tau[t - 1] is None:
            tau[t - 1] = image_t
        elif tau[t - 1] != image_t:
            raise TauIllDefined(
                f"time {t} maps to both {tau[t - 1]} and {image_t}")
    fixed = tuple(int(t) for t in tau)  # surjectivity guarantees no None
    for a, b in zip(fixed, fixed[1:]):
        if abs(a - b) > 1:
            raise TauNotGraphMap(f"tau jumps from {a} to {b}")
    inclusion = all(fixed[i] == i + 1 for i in range(len(fixed)))
    return BurningMorphism(f, b_g, b_h, fixed, inclusion)


def identity_morphism(b: Burning) -> BurningMorphism:
    from .graphs import identity_map
    return validate_morphism(identity_map(b.graph), b, b)


def compose_morphisms(second: BurningMorphism, first: BurningMorphism) -> BurningMorphism:
    if first.codomain != second.domain:
        raise MorphismError("morphisms do not compose")
    from .graphs import compose_graph_maps
    f = compose_graph_maps(second.graph_map, first.graph_map)
    return validate_morphism(f, first.domain, second.codomain)


# ---------------------------------------------------------------------------
# B-burned subgraphs


class SizeGuardExceeded(RuntimeError):
    """Explicit refusal to brute force past the configured size cap."""


def is_b_burned(h: Subgraph, b: Burning) -> Burning | None:
    """Test whether the subgraph burns compatibly with the ambient burning.

    The subgraph must carry the full source sequence of the ambient burning:
    its own burning by that sequence must restrict the ambient time function
    and include as a morphism.  Returns the subgraph burning (on the extracted
    graph, whose vertex i is h.vertices[i]) or None.
    """
    if h.ambient != b.graph:
        raise BurningError("subgraph does not live in the burned graph")
    if not classify(b.graph).connected:
        raise BurningError("ambient graph must be connected")
    local, labels = h.as_graph()
    if not classify(local).connected:
        raise BurningError("subgraph must be connected")
    position = {v: i for i, v in enumerate(labels)}
    if any(v not in position for v in b.sources):
        return None
    local_sources = tuple(position[v] for v in b.sources)
    try:
        b_local = validate_burning(local, local_sources)
    except BurningError:
        return None
    if any(b_local.time(position[v]) != b.time(v) for v in labels):
        return None
    inclusion = validate_graph_map(labels, local, b.graph)
    try:
        validate_morphism(inclusion, b_local, b)
    except MorphismError:
        return None
    return b_local


def _connected_edge_subsets(vertices: tuple[int, ...],
                            edges: list[tuple[int, int]]) -> Iterator[frozenset]:
    """All edge subsets that keep the given vertex set connected."""
    n = len(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    for r in range(n - 1, len(edges) + 1):
        for chosen in combinations(edges, r):
            parent = list(range(n))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            parts = n
            for v, w in chosen:
                rv, rw = find(index[v]), find(index[w])
                if rv != rw:
                    parent[rv] = rw
                    parts -= 1
            if parts == 1:
                yield frozenset(chosen)


def minimal_b_burned_subgraphs(b: Burning, max_vertices: int = 8,
                               max_edges: int = 14) -> list[Subgraph]:
    """Brute-force the minimal compatible subgraphs of a burning.

    Enumerates every connected subgraph (vertex subset plus edge subset) that
    is burned compatibly and keeps the inclusion-minimal ones.
    """
    g = b.graph
    if g.vertex_count > max_vertices or len(g.edges) > max_edges:
        raise SizeGuardExceeded(
            f"graph has {g.vertex_count} vertices / {len(g.edges)} edges; "
            f"cap is {max_vertices} / {max_edges}")
    needed = set(b.sources)
    others = [v for v in g.vertices if v not in needed]
    found: list[Subgraph] = []
    for r in range(len(others) + 1):
        for extra in combinations(others, r):
            vs = tuple(sorted(needed.union(extra)))
            inside = set(vs)
            pool = sorted(e for e in g.edges if e[0] in inside and e[1] in inside)
            for chosen in _connected_edge_subsets(vs, pool):
                candidate = Subgraph(g, vs, chosen)
                if is_b_burned(candidate, b) is not None:
                    found.append(candidate)
    minimal = [h for h in found
               if not any(h.contains(other) and other != h for other in found)]
    minimal.sort(key=lambda h: (h.vertices, sorted(h.edges)))
    return minimal


# ---------------------------------------------------------------------------
# Burning extensions


def admits_extension(b_h: Burning, embed: GraphMap, g: Graph) -> Burning | None:
    """First burning of g extending the given burning through the embedding."""
    if embed.domain != b_h.graph or embed.codomain != g:
        raise BurningError("embedding endpoints do not match")
    if not embed.is_injective():
        raise BurningError("embedding must be injective")
    k = len(b_h.sources)
    embedded = tuple(embed(v) for v in b_h.sources)
    for b_g in enumerate_burnings(g):
        if b_g.sources[:k] != embedded:
            continue
        try:
            validate_morphism(embed, b_h, b_g)
        except MorphismError:
            continue
        return b_g
    return None


def is_burning_extension(embed: GraphMap, max_vertices: int = 10) -> bool:
    """Whether every source set of the domain extends to one of the codomain."""
    if not embed.is_injective():
        raise BurningError("embedding must be injective")
    g = embed.codomain
    if g.vertex_count > max_vertices:
        raise SizeGuardExceeded(
            f"graph has {g.vertex_count} vertices; cap is {max_vertices}")
    target_sets = [b.source_set() for b in enumerate_burnings(g)]
    for b_h in enumerate_burnings(embed.domain):
        image = frozenset(embed(v) for v in b_h.sources)
        if not any(image <= s for s in target_sets):
            return False
    return True


# ---------------------------------------------------------------------------
# Extremal path burnings


@dataclass(frozen=True)
class ExtremalPathReport:
    kind: str
    param: int
    n: int
    witness: tuple[int, ...]  # 0-based sources validated on path_graph(n)
    burning: Burning


def _closed_form_witness(kind: str, p: int) -> tuple[int, ...]:
    """The 1-based source positions suggested by the closed-form analysis."""
    if kind == "max-n-for-T":
        out = [p]
        for j in range(2, p + 1):
            out.append(sum(2 * i + 1 for i in range(p - j + 1, p)) + p - j + 1)
        return tuple(out)
    if kind == "max-n-for-T-hom":
        out = [p]
        for j in range(2, p + 1):
            out.append(sum(2 * i for i in range(p - j + 1, p)) + p - j)
        return tuple(out)
    if kind == "max-n-for-k":
        # Tile the path with disjoint radius-(k+1-j) neighborhoods, largest first.
        out = []
        offset = 0
        for j in range(1, p + 1):
            radius = p + 1 - j
            out.append(offset + radius + 1)
            offset += 2 * radius + 1
        return tuple(out)
    if kind == "min-n-for-k":
        return tuple(2 * i - 1 for i in range(1, p + 1))
    if kind == "min-n-for-k-hom":
        return tuple(3 * i - 2 for i in range(1, p + 1))
    raise ValueError(f"unknown extremal kind {kind!r}")


_EXTREMAL_N = {
    "max-n-for-T": lambda p: p * p,
    "max-n-for-T-hom": lambda p: p * p - p + 1,
    "max-n-for-k": lambda p: p * p + 2 * p,
    "min-n-for-k": lambda p: 2 * p - 1,
    "min-n-for-k-hom": lambda p: 3 * p - 2,
}


def _witness_ok(kind: str, p: int, b: Burning) -> bool:
    if kind in ("max-n-for-T", "max-n-for-T-hom"):
        if b.end_time != p:
            return False
    else:
        if len(b.sources) != p:
            return False
    if kind.endswith("-hom"):
        return burning_map(b).is_homomorphism
    return True


def extremal_path_report(kind: str, param: int) -> ExtremalPathReport:
    """The extremal path length for the given constraint, with a validated witness.

    The closed-form source positions are tried first; if they do not validate
    the witness is found by exhaustive search over all burnings of the path.
    """
    if param < 1:
        raise ValueError("parameter must be >= 1")
    if kind not in _EXTREMAL_N:
        raise ValueError(f"unknown extremal kind {kind!r}")
    n = _EXTREMAL_N[kind](param)
    g = path_graph(n)
    try:
        one_based = _closed_form_witness(kind, param)
        b = validate_burning(g, tuple(v - 1 for v in one_based))
        if _witness_ok(kind, param, b):
            return ExtremalPathReport(kind, param, n, b.sources, b)
    except BurningError:
        pass
    for s in iter_burning_sequences(g):
        b = validate_burning(g, s)
        if _witness_ok(kind, param, b):
            return ExtremalPathReport(kind, param, n, b.sources, b)
    raise RuntimeError(f"no witness exists for {kind} at parameter {param}")
