from fractions import Fraction as F

import pytest

from fredprofile.docio import (
    AnalysisReport,
    OperatorDocument,
    build_report,
    parse_document,
    parse_rational,
    rational_str,
    serialize_document,
)
from fredprofile.errors import DocumentError
from fredprofile.model import (
    LEFT_SHIFT,
    QNIL_SHIFT,
    QNIL_SHIFT_DUAL,
    RIGHT_SHIFT,
    OperatorExpr,
    matrix_atom,
    point,
)

J3 = matrix_atom([[0, 1, 0], [0, 0, 1], [0, 0, 0]])


def doc_text(*atom_records, name="op"):
    import json

    return json.dumps({"name": name, "atoms": list(atom_records)})


def test_parse_rational():
    assert parse_rational("3/4") == F(3, 4)
    assert parse_rational("-7") == F(-7)
    assert parse_rational("-10/4") == F(-5, 2)
    assert rational_str(F(-5, 2)) == "-5/2"


@pytest.mark.parametrize(
    "bad", ["1.5", "1e3", "", "1/0", "3/-4", "/2", "1 / 2", 3, 0.5, None, [1]]
)
def test_parse_rational_rejects(bad):
    with pytest.raises(DocumentError):
        parse_rational(bad)


def test_document_round_trip_all_atom_kinds():
    expr = OperatorExpr.of(
        RIGHT_SHIFT,
        matrix_atom([[F(1, 2), -2], [0, 3]]),
        LEFT_SHIFT,
        QNIL_SHIFT,
        QNIL_SHIFT_DUAL,
    )
    doc = OperatorDocument("mixed", expr)
    text = serialize_document(doc)
    assert text.endswith("\n")
    assert parse_document(text) == doc


def test_document_parse_matrix_entries():
    doc = parse_document(
        doc_text({"type": "matrix", "entries": [["0", "1/2"], ["-3", "4"]]})
    )
    m = doc.expr.atoms[0].matrix
    assert m.at(0, 1) == F(1, 2) and m.at(1, 0) == F(-3)


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"name": "x"}',
        '{"name": "x", "atoms": []}',
        '{"name": "", "atoms": [{"type": "right_shift"}]}',
        '{"name": 3, "atoms": [{"type": "right_shift"}]}',
        '{"name": "x", "atoms": [{"type": "right_shift"}], "zzz": 1}',
        '{"name": "x", "atoms": [{"type": "spiral"}]}',
        '{"name": "x", "atoms": ["right_shift"]}',
        '{"name": "x", "atoms": [{"type": "left_shift", "entries": []}]}',
        '{"name": "x", "atoms": [{"type": "matrix"}]}',
        '{"name": "x", "atoms": [{"type": "matrix", "entries": []}]}',
        '{"name": "x", "atoms": [{"type": "matrix", "entries": [["1", "0"]]}]}',
        '{"name": "x", "atoms": [{"type": "matrix", "entries": [[1]]}]}',
        '{"name": "x", "atoms": [{"type": "matrix", "entries": [["1/0"]]}]}',
        '{"name": "x", "atoms": [{"type": "matrix", "entries": [["0.5"]]}]}',
        '{"name": "x", "atoms": [{"type": "matrix", "entries": "1"}]}',
    ],
)
def test_document_rejects(text):
    with pytest.raises(DocumentError):
        parse_document(text)


def test_report_round_trip_is_lossless():
    rep = build_report(OperatorDocument("j3", OperatorExpr.of(J3)), point(0))
    assert AnalysisReport.from_json(rep.to_json()) == rep


def test_report_jordan_block_at_zero():
    rep = build_report(OperatorDocument("j3", OperatorExpr.of(J3)), point(0))
    assert (rep.re, rep.im) == ("0", "0")
    assert rep.summary == {
        "alpha": "0",
        "beta": "0",
        "p": "0",
        "q": "0",
        "index": "0",
        "dis": "3",
    }
    assert rep.classification["gen_drazin"] is True
    assert rep.classification["b_fredholm"] is True
    assert rep.classification["invertible"] is False
    ch = rep.chains
    assert ch["display_length"] == 10
    assert ch["a"]["shown"] == ["0", "1", "2", "3", "3", "3", "3", "3", "3", "3"]
    assert ch["a"]["tail"] == "3 for n >= 3"
    assert ch["c"]["prefix"] == ["1", "1", "1"]
    assert ch["k"]["shown"][:4] == ["0", "0", "1", "0"]
    assert ch["range_closed"]["tail"] is True
    assert ch["nilpotency_degree"] == "3"
    assert ch["quasi_nilpotent"] is True
    assert rep.gkd["decomposable"] is True
    assert rep.gkd["m_part"] is None
    assert rep.gkd["n_part"] == [
        {"type": "matrix", "entries": [["0", "1", "0"], ["0", "0", "1"], ["0", "0", "0"]]}
    ]
    (ma,) = rep.matrix_atoms
    assert ma["atom_index"] == 0
    assert ma["drazin"] == [["0", "0", "0"]] * 3
    assert ma["core_kernel_meet_dim"] == "0"
    assert ma["range_h0_join_codim"] == "0"


def test_report_right_shift_at_zero():
    rep = build_report(OperatorDocument("r", OperatorExpr.of(RIGHT_SHIFT)), point(0))
    assert rep.summary["index"] == "-1"
    assert rep.summary["q"] == "inf"
    assert rep.summary["dis"] == "0"
    assert rep.chains["display_length"] == 4
    assert rep.chains["r"]["tail"] == "n for n >= 0"
    assert rep.chains["r"]["shown"] == ["0", "1", "2", "3"]
    assert rep.chains["range_closed"] == {
        "prefix": [],
        "tail": True,
        "shown": [True, True, True, True],
    }
    assert rep.chains["quasi_nilpotent"] is False
    assert rep.chains["nilpotency_degree"] == "inf"
    assert rep.gkd == {
        "decomposable": True,
        "m_part": [{"type": "right_shift"}],
        "n_part": None,
        "splits": [],
    }
    assert rep.matrix_atoms == []


def test_report_mixed_matrix_split():
    m = matrix_atom([[0, 1, 0], [0, 0, 0], [0, 0, 2]])
    rep = build_report(OperatorDocument("d", OperatorExpr.of(m)), point(0))
    assert rep.gkd["splits"] == [
        {
            "atom_index": 0,
            "m_basis": [["0", "0", "1"]],
            "n_basis": [["1", "0", "0"], ["0", "1", "0"]],
        }
    ]
    assert rep.gkd["m_part"] == [{"type": "matrix", "entries": [["2"]]}]
    assert rep.gkd["n_part"] == [{"type": "matrix", "entries": [["0", "1"], ["0", "0"]]}]
    (ma,) = rep.matrix_atoms
    assert ma["drazin"] == [["0", "0", "0"], ["0", "0", "0"], ["0", "0", "1/2"]]


def test_report_undecomposable_point():
    rep = build_report(OperatorDocument("r", OperatorExpr.of(RIGHT_SHIFT)), point(1))
    assert rep.summary["alpha"] == "undef"
    assert rep.summary["index"] == "undef"
    assert rep.gkd == {"decomposable": False}
    assert rep.classification["pseudo_fredholm"] is False


def test_report_complex_point_realifies_matrix_atoms():
    rep = build_report(
        OperatorDocument("j", OperatorExpr.of(matrix_atom([[0, 1], [0, 0]]))),
        point(0, 1),
    )
    assert (rep.re, rep.im) == ("0", "1")
    (ma,) = rep.matrix_atoms
    assert len(ma["shifted_block"]) == 4
    assert len(ma["drazin"]) == 4
    assert rep.classification["invertible"] is True


def test_report_chain_reconstruction():
    rep = build_report(OperatorDocument("j3", OperatorExpr.of(J3)), point(0))
    back = AnalysisReport.from_json(rep.to_json())
    a = back.chain("a")
    assert [v.to_str() for v in a.values(6)] == ["0", "1", "2", "3", "3", "3"]
    assert back.chain("r") == back.chain("a")
    assert back.chain("b").tail_formula() == "0 for n >= 3"


@pytest.mark.parametrize("text", ["nope", "{}", '{"name": "x"}', "[]"])
def test_report_from_json_rejects(text):
    with pytest.raises(DocumentError):
        AnalysisReport.from_json(text)
