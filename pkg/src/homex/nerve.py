"""Nerve of the cover of a complex by its maximal faces."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from homex.complex_core import Face, SimplicialComplex
from homex.errors import ConsistencyError
from homex.homology import is_homology_nontrivial

FULL_NERVE_MAX_FACETS = 20


@dataclass(frozen=True)
class NerveComplex:
    """Nerve vertex ``i`` stands for ``facets[i]`` of the source complex."""

    complex: SimplicialComplex
    facets: tuple[Face, ...]
    max_dim: int | None = None


def _search(masks, limit, emit_all):
    out: list[tuple[int, ...]] = []

    def extend(prefix, common, start):
        grew = False
        if len(prefix) < limit:
            for j in range(start, len(masks)):
                meet = common & masks[j]
                if meet:
                    grew = True
                    extend(prefix + (j,), meet, j + 1)
        if emit_all:
            out.append(prefix)
        elif not grew and (
            len(prefix) >= limit or not any(common & masks[j] for j in range(start) if j not in prefix)
        ):
            out.append(prefix)

    for i, m in enumerate(masks):
        extend((i,), m, i + 1)
    return out


def nerve_faces(X: SimplicialComplex, max_dim: int | None = None) -> list[tuple[int, ...]]:
    """Every index set of facets with a common vertex, up to ``max_dim``.

    Depth-first over increasing index sequences, carrying the running
    intersection; a set that fails to intersect is never extended.
    """
    masks = X.facet_masks
    limit = len(masks) if max_dim is None else max_dim + 1
    return sorted(_search(masks, limit, emit_all=True))


def nerve_face_count(X: SimplicialComplex, max_dim: int | None = None, limit: int | None = None) -> int | None:
    """Number of nerve faces up to ``max_dim``; None once it exceeds ``limit``."""
    masks = X.facet_masks
    size = len(masks) if max_dim is None else max_dim + 1
    count = 0
    stack = [((i,), m) for i, m in enumerate(masks)]
    while stack:
        (prefix, common) = stack.pop()
        count += 1
        if limit is not None and count > limit:
            return None
        if len(prefix) < size:
            for j in range(prefix[-1] + 1, len(masks)):
                meet = common & masks[j]
                if meet:
                    stack.append((prefix + (j,), meet))
    return count


def nerve_max(X: SimplicialComplex, max_dim: int | None = None) -> NerveComplex:
    """Nerve of the maximal-face cover.

    The full nerve is built for up to 20 facets. Beyond that, unless a
    ``max_dim`` is given, only the ``(dim X + 1)``-skeleton is built, which
    is enough to read off homology in degrees ``0 .. dim X``.
    """
    if max_dim is None and len(X.facets) > FULL_NERVE_MAX_FACETS:
        max_dim = X.dim + 1
    masks = X.facet_masks
    limit = len(masks) if max_dim is None else max_dim + 1
    # only maximal index sets are kept: no later index extends them and no
    # earlier one could have
    top = _search(masks, limit, emit_all=False)
    return NerveComplex(SimplicialComplex._from_antichain(top), X.facets, max_dim)


@dataclass(frozen=True)
class NerveWitness:
    indices: tuple[int, ...]
    facets: tuple[Face, ...]


def nerve_lemma_witness(X: SimplicialComplex, k: int, containing: int | None = None) -> NerveWitness | None:
    """First ``k+2`` facets (lexicographic index order) with empty common
    intersection, or None.

    With ``containing`` set to a facet index, the witness is required to
    include that facet. A nontrivial ``H_k`` guarantees a witness; failing to
    find one in that case raises :class:`ConsistencyError`.
    """
    masks = X.facet_masks
    if containing is None:
        pools = combinations(range(len(masks)), k + 2)
    else:
        others = [i for i in range(len(masks)) if i != containing]
        pools = (tuple(sorted(c + (containing,))) for c in combinations(others, k + 1))
    for idx in pools:
        common = -1
        for i in idx:
            common &= masks[i]
            if not common:
                break
        if not common:
            return NerveWitness(idx, tuple(X.facets[i] for i in idx))
    if is_homology_nontrivial(X, k):
        raise ConsistencyError(
            f"H_{k} is nontrivial but no {k + 2} facets have empty intersection"
        )
    return None


def has_cone_facet(X: SimplicialComplex, k: int) -> bool:
    """Whether some facet meets every ``k+1`` other facets jointly (then
    ``H_k`` must vanish)."""
    masks = X.facet_masks
    for i, m in enumerate(masks):
        others = [o for j, o in enumerate(masks) if j != i]
        if len(others) < k + 1:
            return True
        ok = True
        for combo in combinations(others, k + 1):
            common = m
            for o in combo:
                common &= o
            if not common:
                ok = False
                break
        if ok:
            return True
    return False
