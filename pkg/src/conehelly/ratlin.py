"""Exact rational linear algebra.

Everything in this package reduces to rank and kernel questions over the
rationals, so this module is deliberately boring: dense Gauss-Jordan on
tuples of ``fractions.Fraction``.  No floating point appears anywhere;
rank and dimension decisions are therefore exact, which is what makes the
Helly checkers in the rest of the package trustworthy.

Vectors are plain tuples of Fractions.  Matrices and subspaces get small
frozen dataclasses so they can be hashed and memoized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction
Vec = tuple[Fraction, ...]


def vec(coords: Iterable) -> Vec:
    """Coerce an iterable of ints / Fractions / 'p/q' strings to a vector."""
    return tuple(Fraction(c) for c in coords)


def zero_vec(d: int) -> Vec:
    return (Fraction(0),) * d


def unit_vec(i: int, d: int) -> Vec:
    return tuple(Fraction(1 if j == i else 0) for j in range(d))


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: Fraction, u: Vec) -> Vec:
    return tuple(c * a for a in u)


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def is_zero(u: Vec) -> bool:
    return all(a == 0 for a in u)


@dataclass(frozen=True)
class RationalMatrix:
    """Rectangular matrix of Fractions; ``ncols`` is kept explicitly so the
    zero-row matrix still knows its width."""

    rows: tuple[Vec, ...]
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None) -> "RationalMatrix":
        rs = tuple(vec(r) for r in rows)
        if ncols is None:
            if not rs:
                raise ValueError("ncols required for an empty matrix")
            ncols = len(rs[0])
        return cls(rs, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def transpose(self) -> "RationalMatrix":
        cols = tuple(tuple(row[j] for row in self.rows) for j in range(self.ncols))
        return RationalMatrix(cols, self.nrows)


@dataclass(frozen=True)
class VectorSet:
    """Finite ordered list of vectors in a common ambient dimension.

    Used both for cone generators and for the outer normals of a
    homogeneous halfspace system.  Duplicates are permitted (callers that
    care can ask for them); zero vectors are permitted here but rejected
    by :class:`conehelly.cone.HalfspaceSystem`.
    """

    ambient_dim: int
    vectors: tuple[Vec, ...]

    def __post_init__(self):
        for v in self.vectors:
            if len(v) != self.ambient_dim:
                raise ValueError(
                    f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ambient_dim: int) -> "VectorSet":
        return cls(ambient_dim, tuple(vec(r) for r in rows))

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i: int) -> Vec:
        return self.vectors[i]

    def subset(self, indices: Iterable[int]) -> "VectorSet":
        return VectorSet(self.ambient_dim, tuple(self.vectors[i] for i in indices))

    def matrix(self) -> RationalMatrix:
        return RationalMatrix(self.vectors, self.ambient_dim)

    def duplicate_indices(self) -> list[int]:
        """Indices of vectors that already occurred earlier in the list."""
        seen: set[Vec] = set()
        dups = []
        for i, v in enumerate(self.vectors):
            if v in seen:
                dups.append(i)
            seen.add(v)
        return dups


@dataclass(frozen=True)
class SubspaceBasis:
    """Linear subspace given by a basis; the empty basis is the zero
    subspace, a first-class value here rather than an error."""

    ambient_dim: int
    basis: tuple[Vec, ...]

    def __post_init__(self):
        for v in self.basis:
            if len(v) != self.ambient_dim:
                raise ValueError("basis vector of wrong length")
        if rank_of_rows([list(v) for v in self.basis], self.ambient_dim) != len(self.basis):
            raise ValueError("basis vectors are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Vec) -> bool:
        """Exact membership of a vector in the spanned subspace."""
        if len(v) != self.ambient_dim:
            raise ValueError("dimension mismatch")
        if is_zero(v):
            return True
        rows = [list(b) for b in self.basis] + [list(v)]
        return rank_of_rows(rows, self.ambient_dim) == self.dim


def rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place Gauss-Jordan to reduced row echelon form.

    Pivot selection is the first nonzero entry scanning rows top-down, so
    the computation (not just the canonical result) is deterministic.
    """
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        p = rows[r][c]
        if p != 1:
            rows[r] = [x / p for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank_of_rows(rows: list[list[Fraction]], ncols: int) -> int:
    return len(rref_rows([list(r) for r in rows], ncols)[1])


def rref(m: RationalMatrix) -> tuple[RationalMatrix, tuple[int, ...]]:
    """Reduced row echelon form of ``m`` and its pivot column indices."""
    rows, pivots = rref_rows([list(r) for r in m.rows], m.ncols)
    return RationalMatrix(tuple(tuple(r) for r in rows), m.ncols), tuple(pivots)


def rank(m: RationalMatrix) -> int:
    return len(rref(m)[1])


def span_basis(s: VectorSet) -> SubspaceBasis:
    """Canonical basis of the linear span: the nonzero rows of the rref."""
    rows, pivots = rref_rows([list(v) for v in s.vectors], s.ambient_dim)
    basis = tuple(tuple(rows[i]) for i in range(len(pivots)))
    return SubspaceBasis(s.ambient_dim, basis)


def kernel_basis(m: RationalMatrix) -> SubspaceBasis:
    """Canonical basis of ``{x : m x = 0}``; dimension is ncols - rank."""
    rows, pivots = rref_rows([list(r) for r in m.rows], m.ncols)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(tuple(v))
    return SubspaceBasis(m.ncols, tuple(basis))


def orth_complement(s: SubspaceBasis) -> SubspaceBasis:
    """Orthogonal complement within the ambient space."""
    m = RationalMatrix(s.basis, s.ambient_dim)
    return kernel_basis(m)


def solve_square(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a nonsingular square system exactly (used for Gram systems)."""
    n = len(rows)
    aug = [list(rows[i]) + [rhs[i]] for i in range(n)]
    red, pivots = rref_rows(aug, n + 1)
    if len(pivots) != n or any(p >= n for p in pivots):
        raise ValueError("singular system")
    return [red[i][n] for i in range(n)]


def project_onto_subspace(s: SubspaceBasis, v: Vec) -> Vec:
    """Orthogonal projection of ``v`` onto the subspace spanned by ``s``."""
    if len(v) != s.ambient_dim:
        raise ValueError("dimension mismatch")
    if s.dim == 0:
        return zero_vec(s.ambient_dim)
    gram = [[dot(bi, bj) for bj in s.basis] for bi in s.basis]
    rhs = [dot(bi, v) for bi in s.basis]
    coeffs = solve_square(gram, rhs)
    out = zero_vec(s.ambient_dim)
    for c, b in zip(coeffs, s.basis):
        out = vadd(out, vscale(c, b))
    return out


def project_onto_complement(s: SubspaceBasis, v: Vec) -> Vec:
    """Orthogonal projection of ``v`` onto the orthogonal complement of ``s``.

    Computed as ``v`` minus its projection onto ``s`` via the rational Gram
    system, so the result is exact.
    """
    return vsub(v, project_onto_subspace(s, v))
