"""Operator description documents and analysis reports.

Documents are JSON: {"name": text, "atoms": [record, ...]} where a record
is {"type": "right_shift"} (or any other shift tag) or
{"type": "matrix", "entries": [[row of rationals], ...]}. Rationals travel
as quoted strings "p" or "p/q", never as JSON numbers. Reports are JSON
with every rational and extended value rendered the same way; chains are
stored by prefix plus affine tail so parsing a serialized report
reconstructs it exactly.
"""
from __future__ import annotations

import json
import re as _re
from dataclasses import dataclass
from fractions import Fraction

from .classify import FLAG_NAMES, classify
from .errors import DocumentError
from .extvals import BoolSeq, EvAffineSeq, ExtNat
from .linalg import ExactMatrix, SubspaceBasis
from .model import ATOM_KINDS, Atom, OperatorExpr, Point
from .structure import analyze_expr, drazin_inverse, finiteness_quantities

_RATIONAL_RE = _re.compile(r"-?\d+(/\d+)?\Z")


def parse_rational(value: object) -> Fraction:
    """Exact rational from a quoted "p" or "p/q" string. Numbers, floats,
    and zero denominators are rejected."""
    if not isinstance(value, str) or not _RATIONAL_RE.match(value):
        raise DocumentError(f"not a rational string: {value!r}")
    if "/" in value and value.split("/")[1] == "0":
        raise DocumentError(f"zero denominator: {value!r}")
    return Fraction(value)


def rational_str(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class OperatorDocument:
    name: str
    expr: OperatorExpr


def _atom_from_record(rec: object) -> Atom:
    if not isinstance(rec, dict):
        raise DocumentError("atom record must be an object")
    kind = rec.get("type")
    if kind not in ATOM_KINDS:
        raise DocumentError(f"unknown atom type {kind!r}")
    if kind != "matrix":
        extra = set(rec) - {"type"}
        if extra:
            raise DocumentError(f"unexpected keys {sorted(extra)} on {kind} atom")
        return Atom(kind)
    extra = set(rec) - {"type", "entries"}
    if extra:
        raise DocumentError(f"unexpected keys {sorted(extra)} on matrix atom")
    rows = rec.get("entries")
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise DocumentError("matrix entries must be a nonempty list of rows")
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DocumentError("matrix atoms must be square")
    parsed = [[parse_rational(v) for v in r] for r in rows]
    return Atom("matrix", ExactMatrix.from_rows(parsed))


def _atom_to_record(a: Atom) -> dict:
    if a.kind != "matrix":
        return {"type": a.kind}
    m = a.matrix
    return {
        "type": "matrix",
        "entries": [
            [rational_str(m.at(i, j)) for j in range(m.cols)] for i in range(m.rows)
        ],
    }


def parse_document(text: str) -> OperatorDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    extra = set(obj) - {"name", "atoms"}
    if extra:
        raise DocumentError(f"unexpected document keys {sorted(extra)}")
    name = obj.get("name")
    if not isinstance(name, str) or not name:
        raise DocumentError("document needs a nonempty name")
    atoms = obj.get("atoms")
    if not isinstance(atoms, list) or not atoms:
        raise DocumentError("document needs a nonempty atom list")
    return OperatorDocument(name, OperatorExpr(tuple(_atom_from_record(r) for r in atoms)))


def serialize_document(doc: OperatorDocument) -> str:
    obj = {"name": doc.name, "atoms": [_atom_to_record(a) for a in doc.expr.atoms]}
    return json.dumps(obj, indent=2) + "\n"


def _seq_block(seq: EvAffineSeq, shown: int) -> dict:
    return {
        "prefix": [v.to_str() for v in seq.prefix],
        "tail_base": seq.tail_base.to_str(),
        "tail_slope": seq.tail_slope,
        "shown": [v.to_str() for v in seq.values(shown)],
        "tail": seq.tail_formula(),
    }


def _seq_from_block(b: dict) -> EvAffineSeq:
    return EvAffineSeq(
        tuple(ExtNat.from_str(v) for v in b["prefix"]),
        ExtNat.from_str(b["tail_base"]),
        b["tail_slope"],
    )


def _bool_block(seq: BoolSeq, shown: int) -> dict:
    return {
        "prefix": list(seq.prefix),
        "tail": seq.tail,
        "shown": [seq.at(n) for n in range(shown)],
    }


def _basis_rows(b: SubspaceBasis) -> list:
    return [[rational_str(x) for x in v] for v in b.vectors]


def _matrix_rows(m: ExactMatrix) -> list:
    return [[rational_str(m.at(i, j)) for j in range(m.cols)] for i in range(m.rows)]


@dataclass(frozen=True)
class AnalysisReport:
    """Lossless JSON-shaped view of one analysis: flags, summary, chains
    (prefix + affine tail, plus a finite display window), decomposition
    bases, and per-matrix-atom Drazin and oracle data."""

    name: str
    re: str
    im: str
    classification: dict
    summary: dict
    chains: dict
    gkd: dict
    matrix_atoms: list

    def to_json(self) -> str:
        obj = {
            "name": self.name,
            "point": {"re": self.re, "im": self.im},
            "classification": self.classification,
            "summary": self.summary,
            "chains": self.chains,
            "gkd": self.gkd,
            "matrix_atoms": self.matrix_atoms,
        }
        return json.dumps(obj, indent=2) + "\n"

    @staticmethod
    def from_json(text: str) -> "AnalysisReport":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from None
        try:
            return AnalysisReport(
                name=obj["name"],
                re=obj["point"]["re"],
                im=obj["point"]["im"],
                classification=obj["classification"],
                summary=obj["summary"],
                chains=obj["chains"],
                gkd=obj["gkd"],
                matrix_atoms=obj["matrix_atoms"],
            )
        except (KeyError, TypeError) as exc:
            raise DocumentError(f"malformed report: {exc}") from None

    def chain(self, which: str) -> EvAffineSeq:
        return _seq_from_block(self.chains[which])


def build_report(doc: OperatorDocument, lam: Point) -> AnalysisReport:
    e = doc.expr
    rec = classify(e, lam)
    an = analyze_expr(e, lam)
    s = an.summary
    shown = 2 * e.matrix_ambient() + 4

    summary = {
        "alpha": "undef" if s.alpha is None else s.alpha.to_str(),
        "beta": "undef" if s.beta is None else s.beta.to_str(),
        "p": "undef" if s.p is None else s.p.to_str(),
        "q": "undef" if s.q is None else s.q.to_str(),
        "index": s.index.to_str(),
        "dis": s.dis.to_str(),
    }
    chains = {
        "display_length": shown,
        "a": _seq_block(an.report.a, shown),
        "r": _seq_block(an.report.r, shown),
        "c": _seq_block(an.report.c, shown),
        "b": _seq_block(an.report.b, shown),
        "k": _seq_block(an.report.k, shown),
        "range_closed": _bool_block(an.full.range_closed, shown),
        "fitting_index": an.report.fitting_index.to_str(),
        "nilpotency_degree": an.full.nilpotency_degree.to_str(),
        "quasi_nilpotent": an.full.is_quasinilpotent,
        "pseudo_fredholm_point": an.full.is_pseudofredholm_point,
    }
    if an.pair is None:
        gkd: dict = {"decomposable": False}
    else:
        gkd = {
            "decomposable": True,
            "m_part": None
            if an.pair.m_part is None
            else [_atom_to_record(a) for a in an.pair.m_part.atoms],
            "n_part": None
            if an.pair.n_part is None
            else [_atom_to_record(a) for a in an.pair.n_part.atoms],
            "splits": [
                {
                    "atom_index": sp.atom_index,
                    "m_basis": _basis_rows(sp.m_basis),
                    "n_basis": _basis_rows(sp.n_basis),
                }
                for sp in an.pair.splits
            ],
        }
    matrix_atoms = []
    for i, atom in enumerate(e.atoms):
        if atom.kind != "matrix":
            continue
        from .model import realified

        block, _scale = realified(atom.matrix, lam[0], lam[1])
        meet, join = finiteness_quantities(block)
        matrix_atoms.append(
            {
                "atom_index": i,
                "shifted_block": _matrix_rows(block),
                "drazin": _matrix_rows(drazin_inverse(block)),
                "core_kernel_meet_dim": meet.to_str(),
                "range_h0_join_codim": join.to_str(),
            }
        )
    return AnalysisReport(
        name=doc.name,
        re=rational_str(lam[0]),
        im=rational_str(lam[1]),
        classification={n: rec.flag(n) for n in FLAG_NAMES},
        summary=summary,
        chains=chains,
        gkd=gkd,
        matrix_atoms=matrix_atoms,
    )
