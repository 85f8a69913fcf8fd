"""A small catalog of named operator expressions used by the demos, the
verification suites, and the tests. Entries pair a direct sum with an
optional power (the expression is analyzed as (e - lam)^power)."""
from __future__ import annotations

from dataclasses import dataclass

from .model import (
    LEFT_SHIFT,
    OperatorExpr,
    QNIL_SHIFT,
    QNIL_SHIFT_DUAL,
    RIGHT_SHIFT,
    matrix_atom,
)

J2 = matrix_atom([[0, 1], [0, 0]])
J3 = matrix_atom([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
# nilpotent 2x2 block next to an invertible 1x1 block
J2_DIAG2 = matrix_atom([[0, 1, 0], [0, 0, 0], [0, 0, 2]])


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    expr: OperatorExpr
    power: int = 1


CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry("right_shift", OperatorExpr.of(RIGHT_SHIFT)),
    CatalogEntry("left_shift", OperatorExpr.of(LEFT_SHIFT)),
    CatalogEntry("right_plus_left", OperatorExpr.of(RIGHT_SHIFT, LEFT_SHIFT)),
    CatalogEntry(
        "right_right_left", OperatorExpr.of(RIGHT_SHIFT, RIGHT_SHIFT, LEFT_SHIFT)
    ),
    CatalogEntry("jordan2", OperatorExpr.of(J2)),
    CatalogEntry("jordan3", OperatorExpr.of(J3)),
    CatalogEntry("jordan2_diag2", OperatorExpr.of(J2_DIAG2)),
    CatalogEntry("qnil", OperatorExpr.of(QNIL_SHIFT)),
    CatalogEntry("left_plus_qnil", OperatorExpr.of(LEFT_SHIFT, QNIL_SHIFT)),
    CatalogEntry("right_jordan3_qnil", OperatorExpr.of(RIGHT_SHIFT, J3, QNIL_SHIFT)),
    CatalogEntry(
        "left_plus_qnil_dual", OperatorExpr.of(LEFT_SHIFT, QNIL_SHIFT_DUAL)
    ),
    CatalogEntry("right_shift_squared", OperatorExpr.of(RIGHT_SHIFT), power=2),
)


def by_name(name: str) -> CatalogEntry:
    for entry in CATALOG:
        if entry.name == name:
            return entry
    raise KeyError(name)
