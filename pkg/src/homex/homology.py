"""Integral simplicial homology via boundary matrices and Smith normal form.

Boundary matrices are sparse; almost every pivot in a simplicial boundary
matrix is a unit, so the reduction first eliminates unit pivots one at a
time (a Schur-complement step that keeps everything integral) and only the
leftover non-unit core goes through the dense minimal-pivot Smith reduction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from homex.complex_core import SimplicialComplex, union_complexes
from homex.errors import PreconditionError, ValidationError


@dataclass(frozen=True, eq=False)
class IntegerMatrix:
    """Sparse integer matrix; ``entries`` maps ``(row, col)`` to a nonzero value."""

    rows: int
    cols: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValidationError(f"entry {(r, c)} outside a {self.rows}x{self.cols} matrix")
            if v == 0:
                raise ValidationError(f"entry {(r, c)} stored as zero")

    @classmethod
    def from_dense(cls, data) -> IntegerMatrix:
        data = [list(map(int, row)) for row in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {(r, c): v for r, row in enumerate(data) for c, v in enumerate(row) if v}
        return cls(rows, cols, entries)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise ValidationError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        by_row: dict[int, list[tuple[int, int]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        acc: dict[tuple[int, int], int] = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                acc[(r, c)] = acc.get((r, c), 0) + v * w
        return IntegerMatrix(self.rows, other.cols, {k: v for k, v in acc.items() if v})

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)


@dataclass(frozen=True)
class SNFResult:
    diagonal: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)


def _eliminate_unit(cols, rows, r, c):
    pcol = cols.pop(c)
    for rr in pcol:
        rows[rr].discard(c)
    p = pcol.pop(r)
    for c2 in list(rows[r]):
        col2 = cols[c2]
        f = col2.pop(r) * p  # p is ±1, so dividing by p is multiplying by p
        for rr, v in pcol.items():
            nv = col2.get(rr, 0) - f * v
            if nv:
                if rr not in col2:
                    rows[rr].add(c2)
                col2[rr] = nv
            elif rr in col2:
                del col2[rr]
                rows[rr].discard(c2)
        if not col2:
            del cols[c2]
    del rows[r]


def _diagonalize(A: list[list[int]]) -> list[int]:
    """Dense diagonalization by unimodular row/column operations, pivoting on
    the entry of least absolute value. Returns the absolute diagonal (not yet
    a divisibility chain)."""
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        piv = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                if row[j] and (piv is None or abs(row[j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        ri, rt = A[i], A[t]
                        for j in range(t, n):
                            ri[j] -= q * rt[j]
                    clean = clean and not A[i][t]
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        for i in range(t, m):
                            A[i][j] -= q * A[i][t]
                    clean = clean and not A[t][j]
            if clean:
                break
            # a remainder survived: it is smaller than |p|, make it the pivot
            best = None
            for i in range(t + 1, m):
                if A[i][t] and (best is None or abs(A[i][t]) < best[0]):
                    best = (abs(A[i][t]), i, t)
            for j in range(t + 1, n):
                if A[t][j] and (best is None or abs(A[t][j]) < best[0]):
                    best = (abs(A[t][j]), t, j)
            _, i, j = best
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def _divisibility_chain(values: list[int]) -> list[int]:
    d = sorted(values)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return d


def smith_normal_form(M: IntegerMatrix) -> SNFResult:
    """Invariant factors ``d_1 | d_2 | ... | d_r`` of ``M`` (r = rank)."""
    cols: dict[int, dict[int, int]] = {}
    rows: dict[int, set[int]] = {}
    for (r, c), v in M.entries.items():
        cols.setdefault(c, {})[r] = v
        rows.setdefault(r, set()).add(c)

    diag: list[int] = []
    progress = True
    while progress:
        progress = False
        for c in sorted(cols, key=lambda c: (len(cols[c]), c)):
            col = cols.get(c)
            if col is None:
                continue
            units = [r for r, v in col.items() if v == 1 or v == -1]
            if not units:
                continue
            r = min(units, key=lambda r: (len(rows[r]), r))
            _eliminate_unit(cols, rows, r, c)
            diag.append(1)
            progress = True

    if cols:
        row_ids = sorted({r for col in cols.values() for r in col})
        pos = {r: i for i, r in enumerate(row_ids)}
        col_ids = sorted(cols)
        dense = [[0] * len(col_ids) for _ in row_ids]
        for j, c in enumerate(col_ids):
            for r, v in cols[c].items():
                dense[pos[r]][j] = v
        diag.extend(_diagonalize(dense))
    return SNFResult(tuple(_divisibility_chain(diag)))


def boundary_matrix(X: SimplicialComplex, i: int, reduced: bool = False) -> IntegerMatrix:
    """Matrix of the boundary map from ``i``-faces to ``(i-1)``-faces.

    Rows and columns follow lexicographic face order. Dropping vertex ``j``
    of a face contributes sign ``(-1)**j``. For ``i == 0`` the reduced
    version is the augmentation (a single row of ones).
    """
    if i < 0:
        raise ValidationError("boundary dimension must be non-negative")
    cols = X.faces(i)
    if i == 0:
        if reduced and cols:
            return IntegerMatrix(1, len(cols), {(0, c): 1 for c in range(len(cols))})
        return IntegerMatrix(1 if reduced else 0, len(cols), {})
    index = {f: r for r, f in enumerate(X.faces(i - 1))}
    entries = {}
    for c, face in enumerate(cols):
        for j in range(len(face)):
            entries[(index[face[:j] + face[j + 1:]], c)] = -1 if j % 2 else 1
    return IntegerMatrix(len(index), len(cols), entries)


@dataclass(frozen=True)
class HomologyProfile:
    """Betti numbers and torsion coefficients in degrees ``0 .. dim``."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    reduced: bool = False

    def group(self, k: int) -> tuple[int, tuple[int, ...]]:
        if 0 <= k < len(self.betti):
            return self.betti[k], self.torsion[k]
        return 0, ()

    def is_trivial(self, k: int) -> bool:
        b, t = self.group(k)
        return b == 0 and not t

    def is_acyclic(self) -> bool:
        return all(self.is_trivial(k) for k in range(len(self.betti)))

    def describe(self, k: int) -> str:
        return format_group(*self.group(k))

    def to_dict(self) -> dict:
        return {
            "reduced": self.reduced,
            "betti": list(self.betti),
            "torsion": [list(t) for t in self.torsion],
        }


def format_group(betti: int, torsion=()) -> str:
    """Human-readable abelian group, e.g. ``Z^2 + Z/2``; ``0`` for the trivial group."""
    parts = []
    if betti == 1:
        parts.append("Z")
    elif betti > 1:
        parts.append(f"Z^{betti}")
    parts.extend(f"Z/{t}" for t in torsion)
    return " + ".join(parts) if parts else "0"


def _snf_of_boundary(X, i, reduced, cache):
    key = (i, reduced and i == 0)
    if key not in cache:
        if i > X.dim:
            cache[key] = SNFResult(())
        else:
            cache[key] = smith_normal_form(boundary_matrix(X, i, reduced))
    return cache[key]


def homology_in_degree(X: SimplicialComplex, k: int, reduced: bool = True, _cache=None) -> tuple[int, tuple[int, ...]]:
    """``(betti_k, torsion_k)`` computed from the two boundary maps around degree ``k``.

    Degree -1 is supported for reduced homology: it is ``Z`` exactly when
    the complex is empty.
    """
    if k < 0:
        return (1, ()) if (reduced and k == -1 and X.is_empty()) else (0, ())
    if k > X.dim:
        return 0, ()
    cache = {} if _cache is None else _cache
    n_k = len(X.faces(k))
    out_rank = _snf_of_boundary(X, k, reduced, cache).rank
    incoming = _snf_of_boundary(X, k + 1, reduced, cache)
    return n_k - out_rank - incoming.rank, incoming.torsion


def homology_profile(X: SimplicialComplex, reduced: bool = False) -> HomologyProfile:
    cache: dict = {}
    groups = [homology_in_degree(X, k, reduced, cache) for k in range(X.dim + 1)]
    return HomologyProfile(
        betti=tuple(b for b, _ in groups),
        torsion=tuple(t for _, t in groups),
        reduced=reduced,
    )


def is_homology_nontrivial(X: SimplicialComplex, k: int) -> bool:
    """Whether reduced ``H_k(X; Z)`` is nonzero (free part or torsion)."""
    b, t = homology_in_degree(X, k, reduced=True)
    return b > 0 or bool(t)


def euler_characteristic(X: SimplicialComplex) -> int:
    return sum((-1) ** i * len(X.faces(i)) for i in range(X.dim + 1))


def mv_corollary_check(X: SimplicialComplex, A: SimplicialComplex, B: SimplicialComplex, n: int) -> bool:
    """Check ``H_n(X) == H_{n-1}(A ∩ B)`` for ``X = A ∪ B`` with ``B`` a simplex.

    Requires reduced ``H_n(A) = H_{n-1}(A) = 0``. Violated hypotheses raise
    :class:`PreconditionError`; a mismatch of the two groups returns False.
    """
    union, meet = union_complexes(A, B)
    if union != X:
        raise PreconditionError("A ∪ B does not equal X")
    if len(B.facets) != 1:
        raise PreconditionError("B must be a single full simplex")
    for deg in (n, n - 1):
        if homology_in_degree(A, deg) != (0, ()):
            raise PreconditionError(f"reduced H_{deg}(A) is nonzero")
    return homology_in_degree(X, n) == homology_in_degree(meet, n - 1)
