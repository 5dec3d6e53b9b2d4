"""Finite abstract simplicial complexes stored by their maximal faces.

Vertices are non-negative integers and a face is a strictly increasing tuple
of them. Internally every face also has a bitmask form (bit ``v`` set for
vertex ``v``), which makes subset tests and intersection sizes cheap.

The full face set is never stored; faces of a given dimension are generated
from the facets on first request and cached on the (immutable) instance.
"""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations

from homex.errors import ValidationError

Face = tuple[int, ...]
FVector = tuple[int, ...]


def make_face(vertices: Iterable[int]) -> Face:
    """Validate ``vertices`` and return them as a sorted tuple."""
    verts = list(vertices)
    if not verts:
        raise ValidationError("a face needs at least one vertex")
    for v in verts:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise ValidationError(f"vertex ids must be non-negative integers, got {v!r}")
    face = tuple(sorted(verts))
    if len(set(face)) != len(face):
        raise ValidationError(f"face {face} repeats a vertex")
    return face


def face_mask(face: Iterable[int]) -> int:
    mask = 0
    for v in face:
        mask |= 1 << v
    return mask


def mask_face(mask: int) -> Face:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _maximal(faces: list[Face]) -> tuple[Face, ...]:
    # longest first, so a face can only be absorbed by one already kept
    kept: list[tuple[Face, int]] = []
    for face in sorted(set(faces), key=lambda f: (-len(f), f)):
        m = face_mask(face)
        if not any(m & km == m for _, km in kept):
            kept.append((face, m))
    return tuple(sorted(f for f, _ in kept))


class SimplicialComplex:
    """Immutable simplicial complex given by its facets.

    The constructor accepts any collection of faces; duplicates and faces
    contained in other faces are absorbed, so ``facets`` is always an
    antichain in lexicographic order.
    """

    __slots__ = ("_facets", "_masks", "_vertices", "_cache")

    def __init__(self, faces: Iterable[Iterable[int]] = ()):
        self._set_facets(_maximal([make_face(f) for f in faces]))

    @classmethod
    def _from_antichain(cls, facets: Iterable[Face]) -> SimplicialComplex:
        """Skip absorption; ``facets`` must already be sorted tuples forming an antichain."""
        obj = cls.__new__(cls)
        obj._set_facets(tuple(sorted(facets)))
        return obj

    def _set_facets(self, facets: tuple[Face, ...]):
        self._facets = facets
        self._masks = tuple(face_mask(f) for f in facets)
        self._vertices = tuple(sorted({v for f in facets for v in f}))
        self._cache: dict[int, tuple[Face, ...]] = {}

    @property
    def facets(self) -> tuple[Face, ...]:
        return self._facets

    @property
    def facet_masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self._vertices)

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def dim(self) -> int:
        """Largest facet dimension; -1 for the empty complex."""
        return max((len(f) for f in self._facets), default=0) - 1

    def is_empty(self) -> bool:
        return not self._facets

    def faces(self, i: int) -> tuple[Face, ...]:
        """All ``i``-dimensional faces in lexicographic order (memoized)."""
        if i < 0:
            return ()
        cached = self._cache.get(i)
        if cached is None:
            found: set[Face] = set()
            for f in self._facets:
                if len(f) > i:
                    found.update(combinations(f, i + 1))
            cached = tuple(sorted(found))
            self._cache[i] = cached
        return cached

    def __contains__(self, face) -> bool:
        m = face_mask(face)
        return any(m & fm == m for fm in self._masks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self) -> int:
        return hash(self._facets)

    def __repr__(self) -> str:
        return f"SimplicialComplex({[list(f) for f in self._facets]})"


def from_facets(faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex(faces)


def full_simplex(vertices: Iterable[int]) -> SimplicialComplex:
    return SimplicialComplex([list(vertices)])


def simplex_boundary(n: int, offset: int = 0) -> SimplicialComplex:
    """The boundary of the ``n``-simplex on vertices ``offset .. offset+n``."""
    verts = range(offset, offset + n + 1)
    return SimplicialComplex(combinations(verts, n))


def faces_of_dim(X: SimplicialComplex, i: int) -> list[Face]:
    return list(X.faces(i))


def skeleton(X: SimplicialComplex, i: int) -> SimplicialComplex:
    if i >= X.dim:
        return X
    return SimplicialComplex([f for f in X.facets if len(f) <= i + 1] + list(X.faces(i)))


def is_pure(X: SimplicialComplex, d: int) -> bool:
    return all(len(f) == d + 1 for f in X.facets)


def induced_subcomplex(X: SimplicialComplex, S: Iterable[int]) -> SimplicialComplex:
    keep = set(S)
    parts = [[v for v in f if v in keep] for f in X.facets]
    return SimplicialComplex(p for p in parts if p)


def cone(X: SimplicialComplex, apex: int) -> SimplicialComplex:
    """Join ``X`` with a single new vertex. The cone over the empty complex is a point."""
    if apex in X.vertex_set:
        raise ValidationError(f"cone apex {apex} is already a vertex of the complex")
    if X.is_empty():
        return SimplicialComplex([[apex]])
    return SimplicialComplex(f + (apex,) for f in X.facets)


def suspension(X: SimplicialComplex) -> SimplicialComplex:
    """Join with two fresh apexes ``max+1`` and ``max+2``.

    Following the join convention, the suspension of the empty complex is
    two isolated points (the 0-sphere).
    """
    top = max(X.vertices, default=-1)
    a, b = top + 1, top + 2
    if X.is_empty():
        return SimplicialComplex([[a], [b]])
    return SimplicialComplex([f + (a,) for f in X.facets] + [f + (b,) for f in X.facets])


def intersection(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    parts = []
    for fa in A.facet_masks:
        for fb in B.facet_masks:
            m = fa & fb
            if m:
                parts.append(mask_face(m))
    return SimplicialComplex(parts)


def union_complexes(A: SimplicialComplex, B: SimplicialComplex) -> tuple[SimplicialComplex, SimplicialComplex]:
    """Return ``(A ∪ B, A ∩ B)``."""
    return SimplicialComplex(A.facets + B.facets), intersection(A, B)


def relabel(X: SimplicialComplex, mapping) -> SimplicialComplex:
    """Apply an injective vertex map (dict or sequence indexed by vertex)."""
    images = [mapping[v] for v in X.vertices]
    if len(set(images)) != len(images):
        raise ValidationError("relabeling must be injective on the vertex set")
    return SimplicialComplex([mapping[v] for v in f] for f in X.facets)


def normalize_labels(X: SimplicialComplex) -> SimplicialComplex:
    """Relabel vertices to ``0 .. n-1`` preserving their order."""
    return relabel(X, {v: i for i, v in enumerate(X.vertices)})


def f_vector(X: SimplicialComplex) -> FVector:
    return tuple(len(X.faces(i)) for i in range(X.dim + 1))
