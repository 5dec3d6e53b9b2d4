"""Named test complexes: classic examples, every construction on its
parameter grid, and seeded random pure complexes."""

from __future__ import annotations

import random
from itertools import combinations

from homex.complex_core import SimplicialComplex, cone, simplex_boundary, suspension
from homex.constructions import (
    build_mh,
    build_ms,
    build_rel,
    build_suspension_example,
    connectivity_threshold,
)

RP2_FACETS = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
    (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3),
]


def projective_plane() -> SimplicialComplex:
    """The 6-vertex, 10-triangle real projective plane."""
    return SimplicialComplex(RP2_FACETS)


def torus() -> SimplicialComplex:
    """The 7-vertex torus."""
    tri = []
    for i in range(7):
        tri.append((i, (i + 1) % 7, (i + 3) % 7))
        tri.append((i, (i + 2) % 7, (i + 3) % 7))
    return SimplicialComplex(tri)


def classic_corpus() -> list[tuple[str, SimplicialComplex]]:
    out = [(f"boundary_simplex_{n}", simplex_boundary(n)) for n in range(1, 7)]
    out.append(("projective_plane", projective_plane()))
    out.append(("torus", torus()))
    out.append(("cone_boundary_triangle", cone(simplex_boundary(2), 3)))
    out.append(("suspension_projective_plane", suspension(projective_plane())))
    out.append(("two_points", SimplicialComplex([[0], [1]])))
    return out


def mh_grid(max_d: int = 6, min_k: int = 0):
    for d in range(max_d + 1):
        for k in range(min_k, d + 1):
            yield d, k


def strong_grid(max_d: int = 5):
    for d in range(1, max_d + 1):
        for k in range(1, d + 1):
            yield d, k


def rel_grid(max_d: int = 5):
    for d, k in strong_grid(max_d):
        for m in range(connectivity_threshold(d, k) + 1, d + 1):
            yield d, k, m


def construction_corpus() -> list[tuple[str, SimplicialComplex]]:
    out = [(f"mh_{d}_{k}", build_mh(d, k)) for d, k in mh_grid()]
    for d, k in strong_grid():
        out.append((f"ms_{d}_{k}", build_ms(d, k)))
        out.append((f"susp_{d}_{k}", build_suspension_example(d, k)))
    out += [(f"rel_{d}_{k}_{m}", build_rel(d, k, m)) for d, k, m in rel_grid()]
    return out


def random_pure_complex(rng: random.Random, n: int, d: int, num_facets: int) -> SimplicialComplex:
    pool = list(combinations(range(n), d + 1))
    return SimplicialComplex(rng.sample(pool, min(num_facets, len(pool))))


def random_corpus(seed: int = 0, count: int = 150, max_n: int = 7, max_facets: int = 10):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(2, max_n)
        d = rng.randint(0, min(3, n - 1))
        f = rng.randint(1, max_facets)
        out.append((f"random_{seed}_{i}", random_pure_complex(rng, n, d, f)))
    return out


def full_corpus(seed: int = 0) -> list[tuple[str, SimplicialComplex]]:
    return classic_corpus() + construction_corpus() + random_corpus(seed)
