"""Structural invariants: chain reports, canonical Kato-type decompositions,
defect numbers, ascent/descent-style stabilization points, Drazin inverses.

The canonical decomposition splits each atom of e - lam into a semi-regular
part and a quasi-nilpotent part: matrix atoms via the Fitting split at the
shifted (and, for complex points, realified) block, shift atoms wholesale
according to their tables. alpha and beta are the kernel dimension and range
codimension of the assembled semi-regular part; p and q are the
stabilization points of that part's kernel and range chains (0 or infinity,
since a semi-regular operator has exactly linear chains); dis is the
stabilization point of the full meet chain.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPseudoFredholm
from .extvals import EvAffineSeq, ExtIndex, ExtNat, INF, UNDEF_INDEX
from .linalg import (
    ExactMatrix,
    SubspaceBasis,
    image_basis,
    inverse,
    kernel_basis,
    rref,
    restrict,
    subspace_intersection,
    subspace_sum,
)
from .model import (
    Atom,
    MatrixChainData,
    OperatorExpr,
    Point,
    StructuralProfile,
    ZERO_DIM_PROFILE,
    direct_sum_profile,
    matrix_chain_data,
    matrix_profile,
    power_profile,
    realified,
)


@dataclass(frozen=True)
class ChainReport:
    """The four chains with the derived defect chain k_n = c_n - c_{n+1},
    the stabilization point dis of the meet chain, and the stabilization
    point of the kernel chain (the Fitting index for matrix expressions)."""

    a: EvAffineSeq
    r: EvAffineSeq
    c: EvAffineSeq
    b: EvAffineSeq
    k: EvAffineSeq
    dis: ExtNat
    fitting_index: ExtNat


def chains(p: StructuralProfile) -> ChainReport:
    return ChainReport(
        a=p.a,
        r=p.r,
        c=p.c,
        b=p.b,
        k=p.c.diff(),
        dis=p.c.stabilization_point(),
        fitting_index=p.a.stabilization_point(),
    )


@dataclass(frozen=True)
class MatrixSplit:
    """Fitting split of one matrix atom's shifted block: the ambient space
    is the exact direct sum of m_basis (restriction invertible) and n_basis
    (restriction nilpotent). Bases live in the realified space when the
    point has a nonzero imaginary part."""

    atom_index: int
    m_basis: SubspaceBasis
    n_basis: SubspaceBasis


@dataclass(frozen=True)
class GKDPair:
    """Canonical decomposition of e - lam at the stored point.

    m_part and n_part are formal direct sums describing the semi-regular
    and quasi-nilpotent sides; matrix atoms appear as restrictions of the
    shifted block (so those pieces are understood at 0), shift atoms appear
    as themselves (understood at the stored point). None encodes a trivial
    part. Splits record the bases for every matrix atom.
    """

    point: Point
    m_part: OperatorExpr | None
    n_part: OperatorExpr | None
    splits: tuple[MatrixSplit, ...]


@dataclass(frozen=True)
class StructuralSummary:
    """Point summary: defect numbers alpha/beta and stabilization points
    p/q of the canonical semi-regular part, the index, and dis. The first
    four are None exactly when no decomposition exists at the point."""

    alpha: ExtNat | None
    beta: ExtNat | None
    p: ExtNat | None
    q: ExtNat | None
    index: ExtIndex
    dis: ExtNat

    def __post_init__(self):
        present = [self.alpha, self.beta, self.p, self.q]
        if any(v is None for v in present) != all(v is None for v in present):
            raise ValueError("summary fields must be all defined or all undefined")
        if self.alpha is not None:
            if self.index != ExtIndex.from_alpha_beta(self.alpha, self.beta):
                raise ValueError("index must equal alpha - beta")
        elif self.index != UNDEF_INDEX:
            raise ValueError("index must be undefined without a decomposition")


@dataclass(frozen=True)
class AtomAnalysis:
    """Per-atom pieces of the canonical decomposition at one point."""

    atom: Atom
    profile: StructuralProfile
    m_profile: StructuralProfile | None
    n_profile: StructuralProfile | None
    m_atom: Atom | None
    n_atom: Atom | None
    m_basis: SubspaceBasis | None
    n_basis: SubspaceBasis | None


def _analyze_matrix_atom(atom: Atom, lam: Point) -> AtomAnalysis:
    s, scale = realified(atom.matrix, lam[0], lam[1])
    data = matrix_chain_data(s)
    prof = matrix_profile(data, scale)
    core = data.images[data.nu]
    h0 = data.kernels[data.nu]
    # Fitting: ambient = core ⊕ h0, S invertible on core, nilpotent on h0
    assert core.dim + h0.dim == s.rows
    assert subspace_sum(core, h0).dim == s.rows
    m_atom = m_prof = None
    if core.dim:
        blk = restrict(s, core)
        m_atom = Atom("matrix", blk)
        m_prof = matrix_profile(matrix_chain_data(blk), scale)
        assert m_prof.a.at(1) == ExtNat(0) and m_prof.r.at(1) == ExtNat(0)
    n_atom = n_prof = None
    if h0.dim:
        blk = restrict(s, h0)
        n_atom = Atom("matrix", blk)
        n_prof = matrix_profile(matrix_chain_data(blk), scale)
        assert n_prof.nilpotency_degree == ExtNat(data.nu)
    return AtomAnalysis(atom, prof, m_prof, n_prof, m_atom, n_atom, core, h0)


def analyze_atom(atom: Atom, lam: Point) -> AtomAnalysis:
    from .model import atom_profile  # local to keep module import light

    if atom.kind == "matrix":
        return _analyze_matrix_atom(atom, lam)
    prof = atom_profile(atom, lam)
    if not prof.is_pseudofredholm_point:
        return AtomAnalysis(atom, prof, None, None, None, None, None, None)
    if prof.is_quasinilpotent:
        return AtomAnalysis(atom, prof, None, prof, None, atom, None, None)
    return AtomAnalysis(atom, prof, prof, None, atom, None, None, None)


@dataclass(frozen=True)
class ExprAnalysis:
    """Everything the classifier needs about (e - lam)^power."""

    expr: OperatorExpr
    point: Point
    power: int
    full: StructuralProfile
    report: ChainReport
    decomposable: bool
    m_profile: StructuralProfile | None
    n_profile: StructuralProfile | None
    pair: GKDPair | None
    summary: StructuralSummary


def analyze_expr(e: OperatorExpr, lam: Point, power: int = 1) -> ExprAnalysis:
    parts = [analyze_atom(a, lam) for a in e.atoms]
    full = direct_sum_profile([p.profile for p in parts])
    full = power_profile(full, power)
    report = chains(full)
    if not full.is_pseudofredholm_point:
        summary = StructuralSummary(None, None, None, None, UNDEF_INDEX, report.dis)
        return ExprAnalysis(e, lam, power, full, report, False, None, None, None, summary)
    m_prof = direct_sum_profile(
        [p.m_profile for p in parts if p.m_profile is not None] or [ZERO_DIM_PROFILE]
    )
    n_prof = direct_sum_profile(
        [p.n_profile for p in parts if p.n_profile is not None] or [ZERO_DIM_PROFILE]
    )
    m_prof = power_profile(m_prof, power)
    n_prof = power_profile(n_prof, power)
    m_atoms = tuple(p.m_atom for p in parts if p.m_atom is not None)
    n_atoms = tuple(p.n_atom for p in parts if p.n_atom is not None)
    splits = tuple(
        MatrixSplit(i, p.m_basis, p.n_basis)
        for i, p in enumerate(parts)
        if p.m_basis is not None
    )
    pair = GKDPair(
        point=lam,
        m_part=OperatorExpr(m_atoms) if m_atoms else None,
        n_part=OperatorExpr(n_atoms) if n_atoms else None,
        splits=splits,
    )
    alpha = m_prof.a.at(1)
    beta = m_prof.r.at(1)
    summary = StructuralSummary(
        alpha=alpha,
        beta=beta,
        p=m_prof.a.stabilization_point(),
        q=m_prof.r.stabilization_point(),
        index=ExtIndex.from_alpha_beta(alpha, beta),
        dis=report.dis,
    )
    return ExprAnalysis(e, lam, power, full, report, True, m_prof, n_prof, pair, summary)


def canonical_gkd(e: OperatorExpr, lam: Point) -> GKDPair:
    an = analyze_expr(e, lam)
    if not an.decomposable:
        raise NotPseudoFredholm(f"no decomposition at point {lam}")
    return an.pair


def alpha_beta_pq(e: OperatorExpr, lam: Point) -> StructuralSummary:
    an = analyze_expr(e, lam)
    if not an.decomposable:
        raise NotPseudoFredholm(f"no decomposition at point {lam}")
    return an.summary


def index(e: OperatorExpr, lam: Point) -> ExtIndex:
    """Index at lam; undefined when no decomposition exists there."""
    return analyze_expr(e, lam).summary.index


def index_with_nilpotent_regrouped(e: OperatorExpr, lam: Point) -> ExtIndex:
    """Index computed with every nilpotent matrix atom counted on the
    semi-regular side as a finite-dimensional (hence Fredholm) summand
    instead of the quasi-nilpotent side. Must agree with index(e, lam)."""
    parts = [analyze_atom(a, lam) for a in e.atoms]
    if any(p.m_profile is None and p.n_profile is None for p in parts):
        raise NotPseudoFredholm(f"no decomposition at point {lam}")
    profs = []
    moved = False
    for p in parts:
        if p.atom.kind == "matrix" and p.profile.nilpotency_degree.is_finite:
            profs.append(p.profile)
            moved = True
        elif p.m_profile is not None:
            profs.append(p.m_profile)
    if not moved:
        raise ValueError("no nilpotent matrix atom to regroup")
    m_prof = direct_sum_profile(profs or [ZERO_DIM_PROFILE])
    return ExtIndex.from_alpha_beta(m_prof.a.at(1), m_prof.r.at(1))


def h0_and_core(m: ExactMatrix) -> tuple[SubspaceBasis, SubspaceBasis]:
    """(H0, K) of a square rational matrix at 0: the kernel and image of
    m^nu at the Fitting index nu."""
    data = matrix_chain_data(m)
    return data.kernels[data.nu], data.images[data.nu]


def alpha_beta_core_oracle(m: ExactMatrix) -> tuple[ExtNat, ExtNat]:
    """Independent route to the defect numbers of a matrix at 0:
    dim(K ∩ N(m)) and codim(R(m) + H0). For matrices both are 0 because the
    restriction to the core is invertible; this is a consistency oracle."""
    h0, core = h0_and_core(m)
    alpha = subspace_intersection(core, kernel_basis(m)).dim
    beta = m.rows - subspace_sum(image_basis(m), h0).dim
    return ExtNat(alpha), ExtNat(beta)


def finiteness_quantities(m: ExactMatrix) -> tuple[ExtNat, ExtNat]:
    """dim(K ∩ N(m)) and codim(R(m) + H0), reported for documentation;
    nothing in the library asserts a relation between them."""
    return alpha_beta_core_oracle(m)


def drazin_inverse(m: ExactMatrix) -> ExactMatrix:
    """Exact Drazin inverse via the Fitting split: invert the core block,
    annihilate the nilpotent block, conjugate back."""
    data = matrix_chain_data(m)
    core = data.images[data.nu]
    h0 = data.kernels[data.nu]
    d = m.rows
    cols = core.vectors + h0.vectors
    p = ExactMatrix(d, d, tuple(cols[j][i] for i in range(d) for j in range(d)))
    k = core.dim
    blk = ExactMatrix.zeros(d, d)
    if k:
        a_inv = inverse(restrict(m, core))
        ent = list(blk.entries)
        for i in range(k):
            for j in range(k):
                ent[i * d + j] = a_inv.at(i, j)
        blk = ExactMatrix(d, d, tuple(ent))
    dz = p @ blk @ inverse(p)
    # Drazin axioms, checked exactly
    assert (dz @ m).entries == (m @ dz).entries
    assert (dz @ m @ dz).entries == dz.entries
    assert (m.power(data.nu + 1) @ dz).entries == m.power(data.nu).entries
    return dz


def restriction_profile(p: StructuralProfile, n: int) -> tuple[ExtNat, ExtNat, ExtIndex]:
    """Defect data of the operator restricted to the range of its n-th
    power: kernel dimension c_n, range codimension b_n, and their index."""
    cn = p.c.at(n)
    bn = p.b.at(n)
    return cn, bn, ExtIndex.from_alpha_beta(cn, bn)
