"""Vertex bounds and the complexes that attain them.

Every builder lays vertices out block by block with semantic labels
(``s0_0``, ``z``, ``v1``, ``w2``, ``q1`` ...) so that ids are deterministic,
and re-checks the properties the construction is meant to have before
returning. A failed check raises :class:`ConsistencyError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from homex.complex_core import (
    SimplicialComplex,
    cone,
    full_simplex,
    induced_subcomplex,
    is_pure,
    simplex_boundary,
    skeleton,
)
from homex.connectivity import is_strongly_connected
from homex.errors import ConsistencyError, DomainError
from homex.homology import is_homology_nontrivial
from homex.nerve import nerve_max


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_pure_range(d, k):
    if not 0 <= k <= d:
        raise DomainError(f"need 0 <= k <= d, got d={d}, k={k}")


def _check_strong_range(d, k):
    if not 1 <= k <= d:
        raise DomainError(f"need 1 <= k <= d, got d={d}, k={k}")


def bound_pure(d: int, k: int) -> int:
    """Fewest vertices of a pure d-complex with nontrivial H_k."""
    _check_pure_range(d, k)
    return _ceil_div((d + 1) * (k + 2), k + 1)


def bound_strong(d: int, k: int) -> int:
    """Fewest vertices of a strongly connected pure d-complex with nontrivial H_k."""
    _check_strong_range(d, k)
    return d + 1 + _ceil_div(d, k)


def connectivity_threshold(d: int, k: int) -> int:
    """Largest m for which the pure-bound construction is still strongly
    connected w.r.t. m."""
    _check_pure_range(d, k)
    return d + 1 - _ceil_div(d + 1, k + 1)


def _check_rel_range(d, k, m):
    _check_strong_range(d, k)
    t = connectivity_threshold(d, k)
    if m <= t:
        raise DomainError(
            f"m={m} must exceed the connectivity threshold {t} for (d, k) = ({d}, {k}); "
            f"at or below it the pure bound {bound_pure(d, k)} applies"
        )
    if m > d:
        raise DomainError(f"m={m} must not exceed d={d}")


def bound_rel(d: int, k: int, m: int) -> int:
    """Fewest vertices of a pure d-complex with nontrivial H_k that is
    strongly connected w.r.t. m, for m above the connectivity threshold."""
    _check_rel_range(d, k, m)
    return d + 1 + _ceil_div(m, k)


def applicable_bound(d: int, k: int, m: int | None = None) -> int:
    """The tight vertex bound for purity alone (``m=None``) or together with
    strong connectivity w.r.t. ``m``."""
    if m is None or m <= connectivity_threshold(d, k):
        return bound_pure(d, k)
    return bound_rel(d, k, m)


def _split(total: int, parts: int) -> list[int]:
    """Sizes of ``parts`` near-equal blocks, larger blocks first."""
    q, r = divmod(total, parts)
    return [q + 1] * r + [q] * (parts - r)


@dataclass(frozen=True)
class ConstructionParams:
    d: int
    k: int
    m: int | None = None

    @property
    def q(self) -> int:
        return (self.d + 1) // (self.k + 1)

    @property
    def r(self) -> int:
        return (self.d + 1) % (self.k + 1)

    @property
    def r_strong(self) -> int:
        return self.d % self.k

    def mh_block_sizes(self) -> list[int]:
        return [self.q + 1] * self.r + [self.q] * (self.k + 2 - self.r)

    def ms_block_sizes(self) -> list[int]:
        return _split(self.d, self.k)

    def rel_block_sizes(self) -> list[int]:
        return _split(self.m, self.k)


class _Layout:
    def __init__(self):
        self.labels: list[str] = []

    def new(self, name: str) -> int:
        self.labels.append(name)
        return len(self.labels) - 1

    def block(self, names) -> list[int]:
        return [self.new(n) for n in names]


@dataclass(frozen=True)
class Labeled:
    """A construction with the name of every vertex id."""

    complex: SimplicialComplex
    labels: tuple[str, ...]
    stages: dict

    def label_of(self, v: int) -> str:
        return self.labels[v]


def _ensure(cond: bool, what: str):
    if not cond:
        raise ConsistencyError(what)


def mh_labeled(d: int, k: int, check: bool = True) -> Labeled:
    _check_pure_range(d, k)
    p = ConstructionParams(d, k)
    lay = _Layout()
    sizes = p.mh_block_sizes()
    blocks = [lay.block(f"s{i}_{j}" for j in range(n)) for i, n in enumerate(sizes)]
    z = lay.new("z") if p.r else None
    facets = []
    for i, omitted in enumerate(blocks):
        f = [v for j, b in enumerate(blocks) if j != i for v in b]
        if z is not None and len(omitted) == p.q + 1:
            f.append(z)
        facets.append(f)
    X = SimplicialComplex(facets)
    if check:
        _ensure(all(len(f) == d + 1 for f in facets), "MH facet of wrong size")
        _ensure(len(X.facets) == k + 2, "MH facets collapsed")
        common = -1
        for m in X.facet_masks:
            common &= m
        _ensure(common == 0, "MH facets have a common vertex")
        _ensure(X.num_vertices == bound_pure(d, k), "MH vertex count differs from the pure bound")
    return Labeled(X, tuple(lay.labels), {"blocks": blocks, "z": z})


def build_mh(d: int, k: int) -> SimplicialComplex:
    """Pure d-complex on ``bound_pure(d, k)`` vertices with ``k+2`` facets and
    nontrivial H_k.

    Blocks ``s_0 .. s_{k+1}``: the first ``r = (d+1) mod (k+1)`` have
    ``q+1`` vertices, the rest ``q = (d+1) // (k+1)``; one extra vertex ``z``
    exists when ``r > 0``. Facet ``i`` is the union of all blocks but
    ``s_i``, plus ``z`` when ``s_i`` is a large block.
    """
    return mh_labeled(d, k).complex


def _is_simplex_boundary_nerve(X: SimplicialComplex, k: int) -> bool:
    N = nerve_max(X).complex
    return N == simplex_boundary(k)


def ms_labeled(d: int, k: int, check: bool = True) -> Labeled:
    _check_strong_range(d, k)
    p = ConstructionParams(d, k)
    lay = _Layout()
    V_blocks = []
    count = 0
    for n in p.ms_block_sizes():
        V_blocks.append(lay.block(f"v{count + j + 1}" for j in range(n)))
        count += n
    V = [v for b in V_blocks for v in b]
    W = lay.block(f"w{j + 1}" for j in range(_ceil_div(d, k) + 1))
    w1 = W[0]
    ms1 = SimplicialComplex(
        [V] + [W + [v for i, b in enumerate(V_blocks) if i != j for v in b] for j in range(k)]
    )
    ms2 = SimplicialComplex(ms1.facets + (tuple(V + W[1:]),))
    attach = full_simplex(V + [w1])
    ms = SimplicialComplex(ms2.facets + attach.facets)
    X = skeleton(ms, d)
    stages = {"MS'": ms1, "MS''": ms2, "attach": attach, "MS": ms, "V": V, "W": W}
    if check:
        _ensure(X.num_vertices == bound_strong(d, k), "MS vertex count differs from the strong bound")
        _ensure(is_pure(X, d), "MS skeleton is not pure")
        _ensure(is_strongly_connected(X, d), "MS skeleton is not strongly connected")
        _ensure(is_homology_nontrivial(X, k), f"MS skeleton has trivial H_{k}")
        _ensure(
            _is_simplex_boundary_nerve(induced_subcomplex(ms2, [w1] + V), k),
            "induced subcomplex on w1 and V does not have a simplex-boundary nerve",
        )
    return Labeled(X, tuple(lay.labels), stages)


def build_ms(d: int, k: int) -> SimplicialComplex:
    """d-skeleton of the explicit strongly connected example on
    ``bound_strong(d, k)`` vertices.

    ``V = {v_1..v_d}`` is split into k near-equal blocks ``S_i``, and ``W``
    has ``ceil(d/k) + 1`` vertices. Start from ``V`` and the sets
    ``W ∪ (V minus S_j)``, add the full simplex on ``V ∪ W - {w_1}`` (now a
    cone with apex ``w_2``), then the simplex on ``V ∪ {w_1}``. The last
    simplex meets the rest in the induced subcomplex on ``{w_1} ∪ V``,
    whose nerve is the boundary of a k-simplex.
    """
    return ms_labeled(d, k).complex


def rel_labeled(d: int, k: int, m: int, check: bool = True) -> Labeled:
    _check_rel_range(d, k, m)
    p = ConstructionParams(d, k, m)
    lay = _Layout()
    V_blocks = []
    count = 0
    for n in p.rel_block_sizes():
        V_blocks.append(lay.block(f"v{count + j + 1}" for j in range(n)))
        count += n
    V = [v for b in V_blocks for v in b]
    W = lay.block(f"w{j}" for j in range(m + 1, d + 2))
    Q = lay.block(f"q{j + 1}" for j in range(_ceil_div(m, k)))
    q1 = Q[0]

    def faces_through_q1(pool):
        rest = [v for v in pool if v != q1]
        return [sorted(c + (q1,)) for c in combinations(rest, d)]

    facets = faces_through_q1(V + Q)
    for j in range(k):
        others = [v for i, b in enumerate(V_blocks) if i != j for v in b]
        facets += faces_through_q1(others + W + Q)
    c1 = SimplicialComplex(facets)
    attach = full_simplex(V + W)
    C = SimplicialComplex(c1.facets + attach.facets)
    stages = {"C'": c1, "attach": attach, "C": C, "V": V, "W": W, "Q": Q}
    if check:
        _ensure(C.num_vertices == bound_rel(d, k, m), "relative example vertex count differs from the bound")
        _ensure(is_pure(C, d), "relative example is not pure")
        _ensure(all(q1 in f for f in c1.facets), "q1 is not a cone point of C'")
        _ensure(is_strongly_connected(C, m), f"relative example is not strongly connected w.r.t. {m}")
        _ensure(is_homology_nontrivial(C, k), f"relative example has trivial H_{k}")
    return Labeled(C, tuple(lay.labels), stages)


def build_rel(d: int, k: int, m: int) -> SimplicialComplex:
    """Pure d-complex on ``bound_rel(d, k, m)`` vertices, strongly connected
    w.r.t. m, with nontrivial H_k.

    ``V`` (m vertices, k near-equal blocks), ``W`` (d+1-m vertices) and
    ``Q`` (ceil(m/k) vertices). ``C'`` consists of the d-faces through
    ``q_1`` inside ``V ∪ Q`` and inside each ``(V minus V_j) ∪ W ∪ Q``; the
    result adds the single d-face ``V ∪ W``.
    """
    return rel_labeled(d, k, m).complex


def suspension_labeled(d: int, k: int, check: bool = True) -> Labeled:
    _check_strong_range(d, k)
    base = mh_labeled(d - 1, k - 1, check=check)
    Xp = base.complex
    v = len(base.labels)
    cx = cone(Xp, v)
    big = full_simplex(Xp.vertices)
    X2 = SimplicialComplex(big.facets + cx.facets)
    X = skeleton(X2, d)
    stages = {"X'": Xp, "CX'": cx, "X''": X2, "apex": v}
    if check:
        _ensure(X.num_vertices == bound_strong(d, k), "suspension example vertex count differs from the strong bound")
        _ensure(is_pure(X, d), "suspension example is not pure")
        _ensure(is_strongly_connected(X, d), "suspension example is not strongly connected")
        _ensure(is_homology_nontrivial(X, k), f"suspension example has trivial H_{k}")
    return Labeled(X, base.labels + ("v",), stages)


def build_suspension_example(d: int, k: int) -> SimplicialComplex:
    """d-skeleton of (simplex on X') ∪ cone(X') where X' is the pure-bound
    example for ``(d-1, k-1)``; homotopic to the suspension of X'."""
    return suspension_labeled(d, k).complex


def labeled(kind: str, d: int, k: int, m: int | None = None) -> Labeled:
    if kind == "mh":
        return mh_labeled(d, k)
    if kind == "ms":
        return ms_labeled(d, k)
    if kind == "susp":
        return suspension_labeled(d, k)
    if kind == "rel":
        if m is None:
            raise DomainError("the relative construction needs m")
        return rel_labeled(d, k, m)
    raise DomainError(f"unknown construction {kind!r}")
