"""Operator model: atoms, direct-sum expressions, and structural profiles.

An operator is a finite direct sum of atoms: exact rational square matrices
and four fixed model shifts on a sequence space. For an expression e and an
exact rational point lam = (re, im), the structural profile of e - lam
records, as symbolic chains over the power n:

    a_n = dim N((e-lam)^n)                    kernel chain
    r_n = codim R((e-lam)^n)                  range codimension chain
    c_n = dim(R((e-lam)^n) ∩ N(e-lam))        meet chain
    b_n = codim(R(e-lam) + N((e-lam)^n))      join codimension chain

together with range closedness per power, quasi-nilpotence, nilpotency
degree, and whether the point admits a generalized Kato decomposition.
Matrix chains are computed by exact linear algebra; shift chains come from
closed-form tables whose justification is noted inline.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import AmbientMismatch
from .extvals import (
    ALWAYS_CLOSED,
    BoolSeq,
    CLOSED_ONLY_AT_ZERO,
    EvAffineSeq,
    ExtNat,
    INF,
    LINEAR_SEQ,
    ZERO_SEQ,
)
from .linalg import (
    ExactMatrix,
    SubspaceBasis,
    image_basis,
    kernel_basis,
    rref,
    subspace_intersection,
    subspace_sum,
)

ATOM_KINDS = ("matrix", "right_shift", "left_shift", "qnil_shift", "qnil_shift_dual")

_SHIFT_DUALS = {
    "right_shift": "left_shift",
    "left_shift": "right_shift",
    "qnil_shift": "qnil_shift_dual",
    "qnil_shift_dual": "qnil_shift",
}

Point = tuple[Fraction, Fraction]


def point(re, im=0) -> Point:
    return (Fraction(re), Fraction(im))


@dataclass(frozen=True)
class Atom:
    """One direct summand: a square rational matrix or a model shift."""

    kind: str
    matrix: ExactMatrix | None = None

    def __post_init__(self):
        if self.kind not in ATOM_KINDS:
            raise ValueError(f"unknown atom kind {self.kind!r}")
        if self.kind == "matrix":
            if self.matrix is None:
                raise ValueError("matrix atom needs a matrix")
            if self.matrix.rows != self.matrix.cols or self.matrix.rows < 1:
                raise ValueError("matrix atom must be square and nonempty")
        elif self.matrix is not None:
            raise ValueError("shift atoms carry no matrix")


RIGHT_SHIFT = Atom("right_shift")
LEFT_SHIFT = Atom("left_shift")
QNIL_SHIFT = Atom("qnil_shift")
QNIL_SHIFT_DUAL = Atom("qnil_shift_dual")


def matrix_atom(rows: Sequence[Sequence]) -> Atom:
    return Atom("matrix", ExactMatrix.from_rows(rows))


@dataclass(frozen=True)
class OperatorExpr:
    """Nonempty formal direct sum of atoms."""

    atoms: tuple[Atom, ...]

    def __post_init__(self):
        if not self.atoms:
            raise ValueError("empty direct sum")

    @staticmethod
    def of(*atoms: Atom) -> "OperatorExpr":
        return OperatorExpr(tuple(atoms))

    def __add__(self, other: "OperatorExpr") -> "OperatorExpr":
        return OperatorExpr(self.atoms + other.atoms)

    def matrix_ambient(self) -> int:
        return sum(a.matrix.rows for a in self.atoms if a.kind == "matrix")


def dual_atom(a: Atom) -> Atom:
    if a.kind == "matrix":
        return Atom("matrix", a.matrix.transpose())
    return Atom(_SHIFT_DUALS[a.kind])


def dual_expr(e: OperatorExpr) -> OperatorExpr:
    """Formal adjoint: transposed matrices, shifts swapped with their duals."""
    return OperatorExpr(tuple(dual_atom(a) for a in e.atoms))


@dataclass(frozen=True)
class StructuralProfile:
    """Chains and point flags of one operator (or direct sum) at one point."""

    a: EvAffineSeq
    r: EvAffineSeq
    c: EvAffineSeq
    b: EvAffineSeq
    range_closed: BoolSeq
    is_quasinilpotent: bool
    nilpotency_degree: ExtNat
    is_pseudofredholm_point: bool

    def __post_init__(self):
        # self-consistency of any valid profile
        if self.a.at(0) != ExtNat(0) or self.r.at(0) != ExtNat(0):
            raise ValueError("chains must start at 0 for the identity power")
        if self.c.at(0) != self.a.at(1):
            raise ValueError("c_0 must equal a_1")
        if self.b.at(0) != self.r.at(1):
            raise ValueError("b_0 must equal r_1")


# Identity-on-nothing profile: neutral element for direct sums. Internal only.
ZERO_DIM_PROFILE = StructuralProfile(
    a=ZERO_SEQ,
    r=ZERO_SEQ,
    c=ZERO_SEQ,
    b=ZERO_SEQ,
    range_closed=ALWAYS_CLOSED,
    is_quasinilpotent=True,
    nilpotency_degree=ExtNat(0),
    is_pseudofredholm_point=True,
)


def realified(m: ExactMatrix, re: Fraction, im: Fraction) -> tuple[ExactMatrix, int]:
    """The rational matrix S with S ~ m - (re + i*im), and a dimension scale.

    For im == 0 this is m - re*I over Q with scale 1. Otherwise the complex
    operator is realified on pairs (x, y) ~ x + i*y, giving the block matrix
    [[m - re*I, im*I], [-im*I, m - re*I]] with scale 2: the realification
    commutes with the complex-structure matrix, so every kernel, image,
    intersection and sum it produces carries even rational dimension, and
    dividing by 2 recovers the complex dimension exactly.
    """
    if im == 0:
        return m.minus_scalar(re), 1
    d = m.rows
    s = m.minus_scalar(re)
    ent = []
    for i in range(2 * d):
        for j in range(2 * d):
            bi, bj = i // d, j // d
            ii, jj = i % d, j % d
            if bi == bj:
                ent.append(s.at(ii, jj))
            elif bi == 0:
                ent.append(Fraction(im if ii == jj else 0))
            else:
                ent.append(Fraction(-im if ii == jj else 0))
    return ExactMatrix(2 * d, 2 * d, tuple(ent)), 2


@dataclass(frozen=True)
class MatrixChainData:
    """Shared exact computations for one square rational matrix S.

    powers[n] = S^n and ranks[n] = rank(S^n) for n = 0..nu+1, where nu is
    the least n with rank(S^n) = rank(S^(n+1)); for a square matrix the
    kernel and image chains both freeze exactly at nu.
    """

    matrix: ExactMatrix
    powers: tuple[ExactMatrix, ...]
    ranks: tuple[int, ...]
    nu: int
    kernels: tuple[SubspaceBasis, ...]
    images: tuple[SubspaceBasis, ...]


def matrix_chain_data(s: ExactMatrix) -> MatrixChainData:
    if s.rows != s.cols:
        raise AmbientMismatch("operator matrices must be square")
    powers = [ExactMatrix.identity(s.rows), s]
    ranks = [s.rows, rref(s)[2]]
    while ranks[-1] != ranks[-2]:
        powers.append(powers[-1] @ s)
        ranks.append(rref(powers[-1])[2])
    nu = len(ranks) - 2
    kernels = tuple(kernel_basis(p) for p in powers)
    images = tuple(image_basis(p) for p in powers)
    return MatrixChainData(s, tuple(powers), tuple(ranks), nu, kernels, images)


def _scaled(v: int, scale: int) -> ExtNat:
    assert v % scale == 0, "realified dimension must be even"
    return ExtNat(v // scale)


def matrix_profile(data: MatrixChainData, scale: int = 1) -> StructuralProfile:
    d = data.matrix.rows
    nu = data.nu
    a_vals = [_scaled(d - data.ranks[n], scale) for n in range(nu + 1)]
    c_vals = [
        _scaled(subspace_intersection(data.images[n], data.kernels[1]).dim, scale)
        for n in range(nu + 1)
    ]
    b_vals = [
        _scaled(d - subspace_sum(data.images[1], data.kernels[n]).dim, scale)
        for n in range(nu + 1)
    ]
    a = EvAffineSeq.from_samples(a_vals, nu)
    nilpotent = data.ranks[nu] == 0
    return StructuralProfile(
        a=a,
        r=a,  # rank-nullity: codim R(S^n) = dim N(S^n) for square S
        c=EvAffineSeq.from_samples(c_vals, nu),
        b=EvAffineSeq.from_samples(b_vals, nu),
        range_closed=ALWAYS_CLOSED,
        is_quasinilpotent=nilpotent,
        nilpotency_degree=ExtNat(nu) if nilpotent else INF,
        is_pseudofredholm_point=True,
    )


def _shift_profile(kind: str, re: Fraction, im: Fraction) -> StructuralProfile:
    """Closed-form tables for the model shifts at an exact rational point.

    Plain shifts, with q2 = re^2 + im^2:
      q2 < 1: right shift minus lam is injective with closed range of
        codimension n at the n-th power; left shift minus lam is surjective
        with kernel dimension n at the n-th power.
      q2 = 1: both are injective with dense, non-closed range at every
        power >= 1; a dense non-closed operator range has infinite linear
        codimension (finite codimension would force closedness), and no
        generalized Kato decomposition exists at these points.
      q2 > 1: resolvent point, all chains vanish.

    Weighted shifts (weights 1/(k+1)): spectral radius 0 because the n-th
    power has norm 1/n!, so any nonzero point is a resolvent point. At 0 the
    forward one is injective and the backward one has kernel dimension n at
    the n-th power; both have dense non-closed ranges at every power >= 1,
    hence infinite range codimension, but being quasi-nilpotent they do
    admit the trivial decomposition, so the point flag stays true.
    """
    inf_tail = EvAffineSeq((ExtNat(0),), INF, 0)
    if kind in ("right_shift", "left_shift"):
        q2 = re * re + im * im
        if q2 > 1:
            return _invertible_profile()
        if q2 == 1:
            return StructuralProfile(
                a=ZERO_SEQ,
                r=inf_tail,
                c=ZERO_SEQ,
                b=EvAffineSeq.constant(INF),
                range_closed=CLOSED_ONLY_AT_ZERO,
                is_quasinilpotent=False,
                nilpotency_degree=INF,
                is_pseudofredholm_point=False,
            )
        if kind == "right_shift":
            return StructuralProfile(
                a=ZERO_SEQ,
                r=LINEAR_SEQ,
                c=ZERO_SEQ,
                b=EvAffineSeq.constant(1),
                range_closed=ALWAYS_CLOSED,
                is_quasinilpotent=False,
                nilpotency_degree=INF,
                is_pseudofredholm_point=True,
            )
        return StructuralProfile(
            a=LINEAR_SEQ,
            r=ZERO_SEQ,
            c=EvAffineSeq.constant(1),
            b=ZERO_SEQ,
            range_closed=ALWAYS_CLOSED,
            is_quasinilpotent=False,
            nilpotency_degree=INF,
            is_pseudofredholm_point=True,
        )
    # weighted quasi-nilpotent shifts
    if re != 0 or im != 0:
        return _invertible_profile()
    if kind == "qnil_shift":
        return StructuralProfile(
            a=ZERO_SEQ,
            r=inf_tail,
            c=ZERO_SEQ,
            b=EvAffineSeq.constant(INF),
            range_closed=CLOSED_ONLY_AT_ZERO,
            is_quasinilpotent=True,
            nilpotency_degree=INF,
            is_pseudofredholm_point=True,
        )
    return StructuralProfile(
        a=LINEAR_SEQ,
        r=inf_tail,
        c=EvAffineSeq.constant(1),
        b=EvAffineSeq.constant(INF),
        range_closed=CLOSED_ONLY_AT_ZERO,
        is_quasinilpotent=True,
        nilpotency_degree=INF,
        is_pseudofredholm_point=True,
    )


def _invertible_profile() -> StructuralProfile:
    return StructuralProfile(
        a=ZERO_SEQ,
        r=ZERO_SEQ,
        c=ZERO_SEQ,
        b=ZERO_SEQ,
        range_closed=ALWAYS_CLOSED,
        is_quasinilpotent=False,
        nilpotency_degree=INF,
        is_pseudofredholm_point=True,
    )


def atom_profile(atom: Atom, lam: Point) -> StructuralProfile:
    """Structural profile of (atom - lam)."""
    re, im = lam
    if atom.kind == "matrix":
        s, scale = realified(atom.matrix, re, im)
        return matrix_profile(matrix_chain_data(s), scale)
    return _shift_profile(atom.kind, re, im)


def direct_sum_profile(profiles: Sequence[StructuralProfile]) -> StructuralProfile:
    """Profile of a direct sum: chains add pointwise, closedness and the
    decomposition flag are conjunctions, nilpotency degree is the maximum."""
    if not profiles:
        raise ValueError("direct sum of no profiles")
    out = profiles[0]
    for p in profiles[1:]:
        out = StructuralProfile(
            a=out.a.add(p.a),
            r=out.r.add(p.r),
            c=out.c.add(p.c),
            b=out.b.add(p.b),
            range_closed=out.range_closed.and_with(p.range_closed),
            is_quasinilpotent=out.is_quasinilpotent and p.is_quasinilpotent,
            nilpotency_degree=max(out.nilpotency_degree, p.nilpotency_degree),
            is_pseudofredholm_point=out.is_pseudofredholm_point
            and p.is_pseudofredholm_point,
        )
    return out


def expr_profile(e: OperatorExpr, lam: Point) -> StructuralProfile:
    return direct_sum_profile([atom_profile(a, lam) for a in e.atoms])


def _meet_from_kernel_chain(a: EvAffineSeq) -> EvAffineSeq:
    # c_n = a_{n+1} - a_n: the operator maps N(S^{n+1}) onto R(S^n) ∩ N(S)
    # with kernel N(S^n); valid whenever the kernel chain is finite.
    prefix = tuple(a.at(i + 1).sub(a.at(i)) for i in range(a.tail_start))
    return EvAffineSeq(prefix, ExtNat(a.tail_slope), 0)


def _join_from_range_chain(r: EvAffineSeq) -> EvAffineSeq:
    # b_n = r_{n+1} - r_n in the finite case; an infinite step stays
    # infinite because kernels in this model are finite-dimensional and a
    # finite-dimensional enlargement cannot fix infinite codimension.
    vals = []
    for i in range(r.tail_start):
        nxt = r.at(i + 1)
        vals.append(INF if not nxt.is_finite else nxt.sub(r.at(i)))
    base = ExtNat(r.tail_slope) if r.tail_base.is_finite else INF
    return EvAffineSeq(tuple(vals), base, 0)


def power_profile(p: StructuralProfile, k: int) -> StructuralProfile:
    """Profile of S^k given the profile of S (chains subsample at step k)."""
    if k < 1:
        raise ValueError("power must be >= 1")
    if k == 1:
        return p
    a = p.a.subsample(k)
    r = p.r.subsample(k)
    if p.nilpotency_degree.is_finite:
        deg = ExtNat((p.nilpotency_degree.value + k - 1) // k)
    else:
        deg = INF
    return StructuralProfile(
        a=a,
        r=r,
        c=_meet_from_kernel_chain(a),
        b=_join_from_range_chain(r),
        range_closed=p.range_closed.subsample(k),
        is_quasinilpotent=p.is_quasinilpotent,
        nilpotency_degree=deg,
        is_pseudofredholm_point=p.is_pseudofredholm_point,
    )
