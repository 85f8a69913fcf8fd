"""Exact dense linear algebra over the rationals.

Entries are fractions.Fraction throughout, ranks and dimensions come from
exact comparisons, and no tolerance appears anywhere. Subspaces are stored
in a canonical reduced echelon form, so two independent computations of the
same subspace yield identical objects and equality is plain ==.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import AmbientMismatch, NotContained, NotInvariant

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable rational matrix, row-major entries."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "ExactMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat: list[Fraction] = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(_frac(x) for x in row)
        return ExactMatrix(r, c, tuple(flat))

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(
            n, n, tuple(_ONE if i == j else _ZERO for i in range(n) for j in range(n))
        )

    @staticmethod
    def zeros(r: int, c: int) -> "ExactMatrix":
        return ExactMatrix(r, c, (_ZERO,) * (r * c))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise AmbientMismatch("matmul shape mismatch")
        out: list[Fraction] = []
        ocols = other.cols
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(ocols):
                s = _ZERO
                for k in range(self.cols):
                    a = ri[k]
                    if a:
                        s += a * other.entries[k * ocols + j]
                out.append(s)
        return ExactMatrix(self.rows, ocols, tuple(out))

    def add(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise AmbientMismatch("add shape mismatch")
        return ExactMatrix(
            self.rows,
            self.cols,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def scale(self, q) -> "ExactMatrix":
        q = _frac(q)
        return ExactMatrix(self.rows, self.cols, tuple(q * a for a in self.entries))

    def minus_scalar(self, q) -> "ExactMatrix":
        """self - q*I on a square matrix."""
        if self.rows != self.cols:
            raise ValueError("minus_scalar needs a square matrix")
        q = _frac(q)
        ent = list(self.entries)
        for i in range(self.rows):
            ent[i * self.cols + i] -= q
        return ExactMatrix(self.rows, self.cols, tuple(ent))

    def power(self, k: int) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("power needs a square matrix")
        if k < 0:
            raise ValueError("negative power")
        acc = ExactMatrix.identity(self.rows)
        for _ in range(k):
            acc = acc @ self
        return acc

    def apply(self, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(vec) != self.cols:
            raise AmbientMismatch("vector length mismatch")
        return tuple(
            sum((self.at(i, j) * vec[j] for j in range(self.cols)), _ZERO)
            for i in range(self.rows)
        )

    def is_zero(self) -> bool:
        return all(not e for e in self.entries)


def rref(m: ExactMatrix) -> tuple[ExactMatrix, tuple[int, ...], int]:
    """Reduced row echelon form. Returns (R, pivot columns, rank)."""
    data = m.to_rows()
    pivots: list[int] = []
    pr = 0
    for pc in range(m.cols):
        sel = None
        for r in range(pr, m.rows):
            if data[r][pc]:
                sel = r
                break
        if sel is None:
            continue
        data[pr], data[sel] = data[sel], data[pr]
        pv = data[pr][pc]
        if pv != 1:
            data[pr] = [x / pv for x in data[pr]]
        for r in range(m.rows):
            if r != pr and data[r][pc]:
                f = data[r][pc]
                data[r] = [x - f * y for x, y in zip(data[r], data[pr])]
        pivots.append(pc)
        pr += 1
        if pr == m.rows:
            break
    out = ExactMatrix.from_rows(data) if m.rows else m
    return out, tuple(pivots), len(pivots)


def rank(m: ExactMatrix) -> int:
    return rref(m)[2]


def inverse(m: ExactMatrix) -> ExactMatrix:
    """Exact inverse of a square invertible matrix (Gauss-Jordan)."""
    if m.rows != m.cols:
        raise ValueError("inverse needs a square matrix")
    n = m.rows
    aug = ExactMatrix(
        n,
        2 * n,
        tuple(
            m.at(i, j) if j < n else (_ONE if j - n == i else _ZERO)
            for i in range(n)
            for j in range(2 * n)
        ),
    )
    red, pivots, rk = rref(aug)
    if rk != n or any(p >= n for p in pivots):
        raise ValueError("matrix is singular")
    return ExactMatrix(
        n, n, tuple(red.at(i, n + j) for i in range(n) for j in range(n))
    )


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of Q^ambient_dim in canonical reduced echelon form.

    The stored vectors are the nonzero rows of the reduced echelon form of
    any spanning set, so two bases of the same subspace compare equal. Build
    through from_vectors; the constructor validates the canonical shape.
    """

    ambient_dim: int
    vectors: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.ambient_dim < 0:
            raise ValueError("negative ambient dimension")
        last_pivot = -1
        for v in self.vectors:
            if len(v) != self.ambient_dim:
                raise AmbientMismatch("vector length != ambient dimension")
            p = next((j for j, x in enumerate(v) if x), None)
            if p is None:
                raise ValueError("zero vector stored in basis")
            if p <= last_pivot or v[p] != 1:
                raise ValueError("basis not in canonical echelon form")
            for w in self.vectors:
                if w is not v and w[p]:
                    raise ValueError("basis not fully reduced")
            last_pivot = p

    @staticmethod
    def from_vectors(ambient_dim: int, vectors: Sequence[Sequence]) -> "SubspaceBasis":
        vecs = [tuple(_frac(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise AmbientMismatch("vector length != ambient dimension")
        if not vecs:
            return SubspaceBasis(ambient_dim, ())
        red, _, rk = rref(ExactMatrix.from_rows(vecs))
        return SubspaceBasis(ambient_dim, tuple(red.row(i) for i in range(rk)))

    @staticmethod
    def zero(ambient_dim: int) -> "SubspaceBasis":
        return SubspaceBasis(ambient_dim, ())

    @staticmethod
    def full(ambient_dim: int) -> "SubspaceBasis":
        ident = ExactMatrix.identity(ambient_dim)
        return SubspaceBasis(
            ambient_dim, tuple(ident.row(i) for i in range(ambient_dim))
        )

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def _pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(v) if x) for v in self.vectors]

    def reduce(self, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Residue of vec after eliminating against the stored echelon rows."""
        v = list(_frac(x) for x in vec)
        if len(v) != self.ambient_dim:
            raise AmbientMismatch("vector length != ambient dimension")
        for row, p in zip(self.vectors, self._pivots()):
            f = v[p]
            if f:
                for j in range(self.ambient_dim):
                    v[j] -= f * row[j]
        return tuple(v)

    def contains(self, vec: Sequence[Fraction]) -> bool:
        return all(not x for x in self.reduce(vec))

    def is_subspace_of(self, other: "SubspaceBasis") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch("subspaces in different ambient spaces")
        return all(other.contains(v) for v in self.vectors)

    def coordinates(self, vec: Sequence[Fraction]) -> tuple[Fraction, ...] | None:
        """Coordinates of vec in the stored basis, or None if outside.

        Reduced echelon rows make this a read-off: the coefficient of row i
        is vec[pivot_i] because no other row has support on that pivot.
        """
        v = tuple(_frac(x) for x in vec)
        if len(v) != self.ambient_dim:
            raise AmbientMismatch("vector length != ambient dimension")
        coords = tuple(v[p] for p in self._pivots())
        residue = list(v)
        for cf, row in zip(coords, self.vectors):
            if cf:
                for j in range(self.ambient_dim):
                    residue[j] -= cf * row[j]
        if any(residue):
            return None
        return coords

    def to_column_matrix(self) -> ExactMatrix:
        return ExactMatrix(
            self.ambient_dim,
            self.dim,
            tuple(v[i] for i in range(self.ambient_dim) for v in self.vectors),
        )


def kernel_basis(m: ExactMatrix) -> SubspaceBasis:
    """Null space of m as a canonical subspace of Q^cols."""
    red, pivots, rk = rref(m)
    pivset = set(pivots)
    free = [j for j in range(m.cols) if j not in pivset]
    vecs = []
    for f in free:
        v = [_ZERO] * m.cols
        v[f] = _ONE
        for i, p in enumerate(pivots):
            v[p] = -red.at(i, f)
        vecs.append(v)
    return SubspaceBasis.from_vectors(m.cols, vecs)


def image_basis(m: ExactMatrix) -> SubspaceBasis:
    """Column space of m as a canonical subspace of Q^rows."""
    _, pivots, _ = rref(m)
    return SubspaceBasis.from_vectors(m.rows, [m.column(j) for j in pivots])


def subspace_sum(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch("sum of subspaces of different ambient spaces")
    return SubspaceBasis.from_vectors(a.ambient_dim, a.vectors + b.vectors)


def subspace_intersection(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    """Intersection via the kernel of the stacked column matrix.

    A kernel vector (u, w) of [A | B] gives A·u = -B·w, a point of the
    intersection; those points span it. The modular law check
    dim a + dim b = dim(a+b) + dim(a∩b) is asserted before returning.
    """
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch("intersection of subspaces of different ambient spaces")
    if a.dim == 0 or b.dim == 0:
        return SubspaceBasis.zero(a.ambient_dim)
    stacked = ExactMatrix(
        a.ambient_dim,
        a.dim + b.dim,
        tuple(
            (a.vectors[j][i] if j < a.dim else b.vectors[j - a.dim][i])
            for i in range(a.ambient_dim)
            for j in range(a.dim + b.dim)
        ),
    )
    ker = kernel_basis(stacked)
    pts = []
    for kv in ker.vectors:
        pt = [_ZERO] * a.ambient_dim
        for j in range(a.dim):
            cf = kv[j]
            if cf:
                for i in range(a.ambient_dim):
                    pt[i] += cf * a.vectors[j][i]
        pts.append(pt)
    inter = SubspaceBasis.from_vectors(a.ambient_dim, pts)
    # dimension formula must hold exactly; a failure is an internal error
    assert a.dim + b.dim == subspace_sum(a, b).dim + inter.dim
    return inter


def quotient_dim(inner: SubspaceBasis, outer: SubspaceBasis) -> int:
    """dim(outer/inner); raises NotContained unless inner <= outer."""
    if inner.ambient_dim != outer.ambient_dim:
        raise AmbientMismatch("quotient of subspaces of different ambient spaces")
    if not inner.is_subspace_of(outer):
        raise NotContained("inner is not a subspace of outer")
    return outer.dim - inner.dim


def restrict(m: ExactMatrix, b: SubspaceBasis) -> ExactMatrix:
    """Matrix of m restricted to the m-invariant subspace b, in b's basis."""
    if m.rows != m.cols:
        raise ValueError("restrict needs a square matrix")
    if m.cols != b.ambient_dim:
        raise AmbientMismatch("matrix and subspace ambient dimensions differ")
    cols: list[tuple[Fraction, ...]] = []
    for v in b.vectors:
        w = m.apply(v)
        coords = b.coordinates(w)
        if coords is None:
            raise NotInvariant("subspace is not invariant under the matrix")
        cols.append(coords)
    k = b.dim
    return ExactMatrix(k, k, tuple(cols[j][i] for i in range(k) for j in range(k)))
