"""Isomorph-free exhaustive search over pure complexes on few vertices.

A pure d-complex on ``n`` labeled vertices is a set of (d+1)-subsets,
stored as a sorted tuple of bitmasks. Its canonical form is the smallest
such tuple over all vertex relabelings that respect an isomorphism-invariant
vertex colouring (iterated refinement of facet degrees), so only
permutations inside colour classes are scanned. The scan is vectorised.

Classes are generated level by level: every class with ``L`` facets is
extended by each missing facet, and the children are deduplicated by
canonical form.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from homex.complex_core import SimplicialComplex, face_mask, mask_face
from homex.connectivity import is_strongly_connected
from homex.constructions import applicable_bound
from homex.errors import CapacityError, ConsistencyError, DomainError
from homex.homology import is_homology_nontrivial

log = logging.getLogger(__name__)

DEFAULT_MAX_N = 8


def max_vertices() -> int:
    """Enumeration cap, overridable with the ``HOMEX_MAX_N`` environment variable."""
    return int(os.environ.get("HOMEX_MAX_N", DEFAULT_MAX_N))


def _check_cap(n):
    cap = max_vertices()
    if n > cap:
        raise CapacityError(f"n={n} exceeds the enumeration cap {cap} (set HOMEX_MAX_N to raise it)")


def _colours(masks: tuple[int, ...], n: int) -> list[int]:
    colour = [sum(m >> v & 1 for m in masks) for v in range(n)]
    members = [[v for v in range(n) if m >> v & 1] for m in masks]
    classes = len(set(colour))
    while True:
        sig = []
        for v in range(n):
            around = sorted(
                tuple(sorted(colour[u] for u in mem if u != v)) for mem in members if v in mem
            )
            sig.append((colour[v], tuple(around)))
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        colour = [rank[s] for s in sig]
        if len(rank) == classes:
            return colour
        classes = len(rank)


@lru_cache(maxsize=None)
def _placements(cells: tuple[tuple[int, ...], ...], n: int) -> np.ndarray:
    """Row ``p`` gives ``1 << position`` of every vertex under the p-th
    colour-respecting relabeling."""
    starts = []
    pos = 0
    for cell in cells:
        starts.append(pos)
        pos += len(cell)
    per_cell = [list(permutations(range(s, s + len(c)))) for s, c in zip(starts, cells)]
    rows = []
    for choice in product(*per_cell):
        row = [0] * n
        for cell, targets in zip(cells, choice):
            for v, t in zip(cell, targets):
                row[v] = 1 << t
        rows.append(row)
    return np.array(rows, dtype=np.int64)


def canonical_form(masks, n: int) -> tuple[int, ...]:
    """Lexicographically least sorted facet-mask tuple over colour-respecting relabelings."""
    masks = tuple(sorted(masks))
    if not masks:
        return ()
    _check_cap(n)
    colour = _colours(masks, n)
    cells = tuple(
        tuple(v for v in range(n) if colour[v] == c) for c in sorted(set(colour))
    )
    place = _placements(cells, n)
    incidence = np.array([[m >> v & 1 for v in range(n)] for m in masks], dtype=np.int64)
    images = np.sort(incidence @ place.T, axis=0)
    best = np.lexsort(images[::-1])[0]
    return tuple(int(x) for x in images[:, best])


def _children(args):
    forms, candidates, n = args
    out = set()
    for form in forms:
        present = set(form)
        for c in candidates:
            if c not in present:
                out.add(canonical_form(form + (c,), n))
    return out


def _chunks(seq, parts):
    parts = max(1, parts)
    size = -(-len(seq) // parts) if seq else 1
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def canonical_classes(n: int, d: int, jobs: int = 1) -> list[tuple[int, ...]]:
    """Canonical forms of all pure d-complexes using exactly the vertices
    ``0 .. n-1``, sorted by facet count then lexicographically."""
    if d < 0 or n < d + 1:
        raise DomainError(f"need n >= d+1 >= 1, got n={n}, d={d}")
    _check_cap(n)
    candidates = [face_mask(c) for c in combinations(range(n), d + 1)]
    full = (1 << n) - 1
    level: list[tuple[int, ...]] = [()]
    found: list[tuple[int, ...]] = []
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        for _ in range(len(candidates)):
            if pool is None:
                nxt = _children((level, candidates, n))
            else:
                nxt = set()
                for part in pool.map(_children, [(c, candidates, n) for c in _chunks(level, jobs * 4)]):
                    nxt |= part
            level = sorted(nxt)
            for form in level:
                cover = 0
                for m in form:
                    cover |= m
                if cover == full:
                    found.append(form)
    finally:
        if pool is not None:
            pool.shutdown()
    return found


def enumerate_pure_canonical(n: int, d: int, jobs: int = 1):
    """Yield one representative per isomorphism class of pure d-complexes
    on exactly ``n`` vertices, in canonical order."""
    for form in canonical_classes(n, d, jobs):
        yield SimplicialComplex(mask_face(m) for m in form)


@dataclass(frozen=True)
class SearchConstraint:
    d: int
    k: int
    n: int
    mode: str = "pure"
    m: int | None = None

    def __post_init__(self):
        if self.mode not in ("pure", "strong"):
            raise DomainError(f"unknown search mode {self.mode!r}")
        if self.mode == "strong":
            if self.m is None or not 0 <= self.m <= self.d:
                raise DomainError("strong mode needs 0 <= m <= d")
            if self.k < 1:
                raise DomainError("strong mode needs k >= 1")
        if not 0 <= self.k <= self.d:
            raise DomainError(f"need 0 <= k <= d, got d={self.d}, k={self.k}")

    def to_dict(self) -> dict:
        return {"d": self.d, "k": self.k, "n": self.n, "mode": self.mode, "m": self.m}


@dataclass
class SearchReport:
    constraint: SearchConstraint
    complexes_examined: int = 0
    canonical_classes: int = 0
    witnesses: list[SimplicialComplex] = field(default_factory=list)
    elapsed: float = 0.0

    def merge(self, other: SearchReport) -> SearchReport:
        return SearchReport(
            self.constraint,
            self.complexes_examined + other.complexes_examined,
            self.canonical_classes + other.canonical_classes,
            sorted(self.witnesses + other.witnesses, key=_order_key),
            max(self.elapsed, other.elapsed),
        )

    def to_dict(self, with_elapsed: bool = True) -> dict:
        out = {
            "constraint": self.constraint.to_dict(),
            "complexes_examined": self.complexes_examined,
            "canonical_classes": self.canonical_classes,
            "witnesses": [[list(f) for f in w.facets] for w in self.witnesses],
        }
        if with_elapsed:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def _order_key(X: SimplicialComplex):
    masks = tuple(sorted(X.facet_masks))
    return len(masks), masks


def _test_forms(args):
    forms, c = args
    examined = 0
    witnesses = []
    for form in forms:
        X = SimplicialComplex(mask_face(m) for m in form)
        if c.mode == "strong" and not is_strongly_connected(X, c.m):
            continue
        examined += 1
        if is_homology_nontrivial(X, c.k):
            witnesses.append(X)
    return SearchReport(c, examined, len(forms), witnesses)


def verify_bound(c: SearchConstraint, jobs: int = 1) -> SearchReport:
    """Test every canonical class at ``c.n`` vertices and list those that
    satisfy the mode filter and have nontrivial ``H_k``."""
    start = time.perf_counter()
    forms = canonical_classes(c.n, c.d, jobs)
    if jobs > 1 and len(forms) > 1:
        report = SearchReport(c)
        with ProcessPoolExecutor(jobs) as pool:
            for part in pool.map(_test_forms, [(f, c) for f in _chunks(forms, jobs * 4)]):
                report = report.merge(part)
    else:
        report = _test_forms((forms, c))
    report.elapsed = time.perf_counter() - start
    log.info("n=%d d=%d k=%d %s: %d classes, %d examined, %d witnesses",
             c.n, c.d, c.k, c.mode, report.canonical_classes, report.complexes_examined, len(report.witnesses))
    return report


@dataclass
class MinimalWitness:
    n_min: int
    witness: SimplicialComplex
    reports: list[SearchReport]
    bound: int

    @property
    def matches_bound(self) -> bool:
        return self.n_min == self.bound

    def to_dict(self) -> dict:
        return {
            "n_min": self.n_min,
            "bound": self.bound,
            "matches_bound": self.matches_bound,
            "witness": [list(f) for f in self.witness.facets],
            "reports": [r.to_dict() for r in self.reports],
        }


def find_minimal_witness(
    d: int,
    k: int,
    mode: str = "pure",
    m: int | None = None,
    jobs: int = 1,
    max_n: int | None = None,
    strict: bool = True,
) -> MinimalWitness:
    """Search ``n = d+1, d+2, ...`` until a witness appears.

    Every earlier report is a certificate that nothing smaller exists. With
    ``strict`` a first witness count different from the closed-form bound
    raises :class:`ConsistencyError`.
    """
    bound = applicable_bound(d, k, m if mode == "strong" else None)
    cap = max_vertices() if max_n is None else min(max_n, max_vertices())
    reports = []
    for n in range(d + 1, cap + 1):
        report = verify_bound(SearchConstraint(d, k, n, mode, m), jobs)
        reports.append(report)
        if report.witnesses:
            result = MinimalWitness(n, report.witnesses[0], reports, bound)
            if strict and not result.matches_bound:
                raise ConsistencyError(f"first witness at n={n}, closed-form bound is {bound}")
            return result
    raise CapacityError(f"no witness for d={d}, k={k}, mode={mode} up to n={cap}")
