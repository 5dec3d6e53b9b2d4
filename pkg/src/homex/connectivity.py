"""Strong connectivity with respect to a dimension, growth processes,
expansion operations and collapses onto a dimension."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx
from networkx.utils import UnionFind

from homex.complex_core import (
    Face,
    SimplicialComplex,
    face_mask,
    induced_subcomplex,
    mask_face,
    union_complexes,
    full_simplex,
)
from homex.errors import (
    ConsistencyError,
    ExpansionError,
    NotStronglyConnectedError,
    PreconditionError,
)

log = logging.getLogger(__name__)

DEFAULT_COLLAPSE_BUDGET = 10**6


@dataclass(frozen=True)
class FacetGraph:
    """Facets of a complex, joined when they share at least ``m`` vertices."""

    nodes: tuple[Face, ...]
    edges: tuple[tuple[int, int], ...]
    m: int

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(len(self.nodes)))
        G.add_edges_from(self.edges)
        return G

    def components(self) -> list[list[Face]]:
        comps = [sorted(c) for c in nx.connected_components(self.to_networkx())]
        comps.sort()
        return [[self.nodes[i] for i in c] for c in comps]


def facet_graph(X: SimplicialComplex, m: int) -> FacetGraph:
    # facets are faces, so sharing >= m vertices is sharing an (m-1)-face
    masks = X.facet_masks
    edges = tuple(
        (i, j)
        for i, j in combinations(range(len(masks)), 2)
        if (masks[i] & masks[j]).bit_count() >= m
    )
    return FacetGraph(X.facets, edges, m)


def _require_dimension(X: SimplicialComplex, m: int):
    low = [f for f in X.facets if len(f) < m + 1]
    if low:
        raise PreconditionError(
            f"strong connectivity w.r.t. dimension {m} needs every facet of dimension >= {m}; "
            f"{low[0]} has dimension {len(low[0]) - 1}"
        )


def strong_components(X: SimplicialComplex, m: int) -> list[list[Face]]:
    """Partition the facets into strong components w.r.t. dimension ``m``,
    ordered by their smallest facet."""
    _require_dimension(X, m)
    return facet_graph(X, m).components()


def skeleton_components(X: SimplicialComplex, m: int) -> list[list[Face]]:
    """The same partition computed from the ``m``-skeleton: ``m``-faces are
    merged along shared ``(m-1)``-faces, then each facet goes to the class of
    its ``m``-faces."""
    _require_dimension(X, m)
    uf = UnionFind()
    owner: dict[Face, Face] = {}
    for face in X.faces(m):
        uf[face]
        for j in range(len(face)):
            ridge = face[:j] + face[j + 1:]
            if ridge in owner:
                uf.union(owner[ridge], face)
            else:
                owner[ridge] = face
    classes: dict[Face, list[Face]] = {}
    for facet in X.facets:
        classes.setdefault(uf[facet[: m + 1]], []).append(facet)
    return sorted(sorted(c) for c in classes.values())


def is_strongly_connected(X: SimplicialComplex, m: int, strict: bool = True) -> bool:
    """Whether the facets of ``X`` form one strong component w.r.t. ``m``.

    With ``strict`` (the default) every facet must have dimension >= ``m``
    and the facet-graph answer is cross-checked against the skeleton
    formulation. ``strict=False`` drops the dimension hypothesis and only
    asks whether the facet graph is connected.
    """
    if X.is_empty():
        return False
    if not strict:
        return nx.is_connected(facet_graph(X, m).to_networkx())
    comps = strong_components(X, m)
    if comps != skeleton_components(X, m):
        raise ConsistencyError(f"facet-graph and skeleton components disagree at m={m}")
    return len(comps) == 1


@dataclass(frozen=True)
class GrowthProcess:
    facets: tuple[Face, ...]
    m: int

    def prefixes(self):
        for i in range(1, len(self.facets) + 1):
            yield SimplicialComplex(self.facets[:i])

    def to_dict(self) -> dict:
        return {"m": self.m, "facets": [list(f) for f in self.facets]}


def growth_process(X: SimplicialComplex, m: int) -> GrowthProcess:
    """Breadth-first facet order from the smallest facet; every prefix is
    strongly connected w.r.t. ``m``."""
    comps = strong_components(X, m)
    if len(comps) != 1:
        raise NotStronglyConnectedError(
            f"complex has {len(comps)} strong components w.r.t. dimension {m}", comps
        )
    G = facet_graph(X, m).to_networkx()
    order = [0] + [v for _, v in nx.bfs_edges(G, 0, sort_neighbors=sorted)]
    return GrowthProcess(tuple(X.facets[i] for i in order), m)


@dataclass(frozen=True)
class ExpansionOp:
    """Attach the full simplex on ``new_face`` along ``attach_region``."""

    new_face: Face
    attach_region: SimplicialComplex = field(default_factory=SimplicialComplex)


def apply_expansion(X: SimplicialComplex, op: ExpansionOp, m: int) -> SimplicialComplex:
    face = tuple(sorted(op.new_face))
    region = op.attach_region
    if len(face) < m + 1:
        raise ExpansionError(f"new face {face} has dimension below {m}")
    if face in X:
        raise ExpansionError(f"{face} is already a face of the complex")
    fm = face_mask(face)
    for g in region.facets:
        if g not in X:
            raise ExpansionError(f"attaching region face {g} is not in the complex")
        if face_mask(g) & fm != face_mask(g):
            raise ExpansionError(f"attaching region face {g} is not in the boundary of {face}")
    if not any(len(g) >= m for g in region.facets):
        raise ExpansionError(f"attaching region has no face of dimension {m - 1}")
    if induced_subcomplex(X, face) != region:
        raise ExpansionError(
            f"{face} meets the complex in {induced_subcomplex(X, face)!r}, not in the stated region"
        )
    result, _ = union_complexes(X, full_simplex(face))
    return result


@dataclass(frozen=True)
class CollapseResult:
    """Outcome of trying to collapse onto a dimension.

    ``status`` is ``"collapsed"``, ``"not_collapsible"`` (proved by an
    exhaustive search) or ``"unknown"`` (greedy failure or budget exhausted).
    """

    status: str
    complex: SimplicialComplex
    steps: tuple[tuple[Face, Face], ...] = ()
    states_explored: int = 0

    @property
    def collapsed(self) -> bool:
        return self.status == "collapsed"


def _closure_masks(X: SimplicialComplex) -> frozenset[int]:
    return frozenset(face_mask(f) for i in range(X.dim + 1) for f in X.faces(i))


def _free_pairs(state: frozenset[int], d: int, universe: list[int]) -> list[tuple[int, int]]:
    """Pairs ``(sigma, tau)`` with ``tau`` maximal of dimension > d and
    ``sigma`` a codimension-one face of ``tau`` lying in no other face."""
    pairs = []
    for tau in state:
        if tau.bit_count() <= d + 1:
            continue
        if any(not tau >> v & 1 and tau | 1 << v in state for v in universe):
            continue
        rest = tau
        while rest:
            low = rest & -rest
            rest ^= low
            sigma = tau ^ low
            if all(sigma | 1 << v == tau or sigma | 1 << v not in state for v in universe if not sigma >> v & 1):
                pairs.append((sigma, tau))
    pairs.sort(key=lambda p: (mask_face(p[0]), mask_face(p[1])))
    return pairs


def _done(state, d):
    return all(m.bit_count() <= d + 1 for m in state)


def _as_complex(state) -> SimplicialComplex:
    return SimplicialComplex(mask_face(m) for m in state)


def collapse_to_dimension(
    X: SimplicialComplex,
    d: int,
    exhaustive: bool = False,
    budget: int = DEFAULT_COLLAPSE_BUDGET,
) -> CollapseResult:
    """Remove free pairs until no face of dimension > ``d`` is left.

    Greedy mode always removes the lexicographically smallest free pair and
    reports ``"unknown"`` when it gets stuck. Exhaustive mode backtracks over
    removal orders, exploring at most ``budget`` states.
    """
    universe = list(X.vertices)
    state = _closure_masks(X)
    steps = []
    explored = 1
    while not _done(state, d):
        pairs = _free_pairs(state, d, universe)
        if not pairs:
            break
        sigma, tau = pairs[0]
        state = state - {sigma, tau}
        steps.append((mask_face(sigma), mask_face(tau)))
        explored += 1
    if _done(state, d):
        return CollapseResult("collapsed", _as_complex(state), tuple(steps), explored)
    if not exhaustive:
        return CollapseResult("unknown", _as_complex(state), tuple(steps), explored)
    if X.dim == d + 1:
        # Only top faces get removed and freeness of the remaining top faces'
        # ridges survives every other removal, so the greedy run is decisive.
        return CollapseResult("not_collapsible", _as_complex(state), tuple(steps), explored)
    return _exhaustive_collapse(_closure_masks(X), d, universe, budget)


def _exhaustive_collapse(start, d, universe, budget) -> CollapseResult:
    seen = {start}
    stack = [(start, ())]
    while stack:
        state, path = stack.pop()
        if _done(state, d):
            return CollapseResult("collapsed", _as_complex(state), path, len(seen))
        for sigma, tau in reversed(_free_pairs(state, d, universe)):
            nxt = state - {sigma, tau}
            if nxt in seen:
                continue
            if len(seen) >= budget:
                return CollapseResult("unknown", _as_complex(start), (), len(seen))
            seen.add(nxt)
            stack.append((nxt, path + ((mask_face(sigma), mask_face(tau)),)))
    return CollapseResult("not_collapsible", _as_complex(start), (), len(seen))


def collapse_claim_agreement(X: SimplicialComplex, d: int, budget: int = DEFAULT_COLLAPSE_BUDGET) -> dict:
    """Compare collapsibility of ``X`` onto dimension ``d`` with the
    conjunction over its strong components w.r.t. ``d + 1``.

    Only facets of dimension > ``d`` form components. Disagreements are
    logged as warnings; the caller decides what to do with them.
    """
    whole = collapse_to_dimension(X, d, exhaustive=True, budget=budget)
    high = SimplicialComplex(f for f in X.facets if len(f) > d + 1)
    parts = []
    if not high.is_empty():
        for comp in strong_components(high, d + 1):
            parts.append(collapse_to_dimension(SimplicialComplex(comp), d, exhaustive=True, budget=budget).status)
    if "unknown" in parts:
        by_parts = "unknown"
    elif all(s == "collapsed" for s in parts):
        by_parts = "collapsed"
    else:
        by_parts = "not_collapsible"
    decided = "unknown" not in (whole.status, by_parts)
    agree = whole.status == by_parts if decided else None
    if agree is False:
        log.warning("collapse claim discrepancy on %r onto dimension %d: whole=%s, components=%s",
                    X, d, whole.status, by_parts)
    return {"whole": whole.status, "components": by_parts, "agree": agree}
