"""Closed-form eigenvalues of the left and right bundle Laplacians.

Each degree-n monomial belongs to one row family of the left table and one
of the right table. ``table_entry`` classifies the monomial and evaluates the
row's closed form with the family parameters read off the monomial; the
family parameter called n in a row is the absolute value of the degree.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Tuple

from ..coefficients import ONE, ZERO, ScalarQ, q_int
from ..quantum_group import Monomial
from .covariant import check_side

HALF = ScalarQ(Fraction(1, 2))


def _q(e: int) -> ScalarQ:
    return ScalarQ.q_power(e)


def _b(r: int) -> ScalarQ:
    return q_int(r)


def lambda_mkl(m: int, k: int, l: int) -> ScalarQ:
    return HALF * (
        _b(m) * _b(l + 1) * _q(2 * (2 - l))
        + _b(k) * _b(l + 1) * _q(4 + 2 * m - 2 * l)
        + _b(l) * _b(m + 1) * _q(2 * (1 - l))
        + _b(l) * _b(k) * _q(4 + 2 * m - 2 * l)
    )


def lambda_neg_mkl(m: int, k: int, l: int) -> ScalarQ:
    return HALF * (
        _b(m) * _b(k + 1) * _q(2 * (1 - m))
        + _b(l) * _b(k + 1) * _q(2 - 2 * m - 2 * l)
        + _b(k) * _b(m + 1) * _q(2 * (2 - m))
        + _b(l) * _b(k) * _q(4 - 2 * m - 2 * l)
    )


def lambda_hat_mkl(m: int, k: int, l: int) -> ScalarQ:
    return HALF * (
        _b(m) * _b(l + 1) * _q(2 - 2 * m - 2 * k)
        + _b(k) * _b(l + 1) * _q(2 * (1 - k))
        + _b(l) * _b(m + 1) * _q(4 - 2 * m - 2 * k)
        + _b(l) * _b(k) * _q(2 * (3 - k))
    )


def lambda_hat_neg_mkl(m: int, k: int, l: int) -> ScalarQ:
    return HALF * (
        _b(m) * _b(k + 1) * _q(4 - 2 * k + 2 * l)
        + _b(l) * _b(k + 1) * _q(2 * (2 - k))
        + _b(k) * _b(m + 1) * _q(2 - 2 * k + 2 * l)
        + _b(k) * _b(l) * _q(2 * (1 - k))
    )


# row formulas take (m, k, l) with m = |a_power| and the degree n


def _left_row2(m, k, l, n):
    return HALF * _b(n) * _q(4)


def _left_row3(m, k, l, n):
    return HALF * _b(-n) * _q(2 * (1 + n))


def _left_row4(m, k, l, n):
    return -HALF * _b(n) * _q(2)


def _left_row5(m, k, l, n):
    return HALF * (_b(l) * _b(m + 1) * _q(2 * (1 - l)) + _b(m) * _b(l + 1) * _q(2 * (2 - l)))


def _left_row6(m, k, l, n):
    return HALF * (_b(m) * _b(k + 1) * _q(2 * (1 - m)) + _b(k) * _b(m + 1) * _q(2 * (2 - m)))


def _left_row7(m, k, l, n):
    return HALF * (_b(l) * _q(2 * (1 - l)) + _b(k) * _q(4) + 2 * _b(l) * _b(k) * _q(2 * (2 - l)))


def _right_row2(m, k, l, n):
    return -HALF * _b(-n) * _q(2)


def _right_row3(m, k, l, n):
    return HALF * _b(n) * _q(2 * (1 - n))


def _right_row4(m, k, l, n):
    return HALF * _b(-n) * _q(4)


def _right_row5(m, k, l, n):
    return HALF * (_b(m) * _b(l + 1) * _q(2 * (1 - m)) + _b(l) * _b(m + 1) * _q(2 * (2 - m)))


def _right_row6(m, k, l, n):
    return HALF * (_b(k) * _b(m + 1) * _q(2 * (1 - k)) + _b(m) * _b(k + 1) * _q(2 * (2 - k)))


def _right_row7(m, k, l, n):
    return HALF * (
        _b(l) * _q(2 * (2 - k))
        + _b(k) * _q(2 * (1 - n))
        + _b(l) * _b(k) * (ONE + _q(4)) * _q(2 * (1 - k))
    )


RowFormula = Callable[[int, int, int, int], ScalarQ]

ROWS: Dict[str, Dict[int, Tuple[str, RowFormula]]] = {
    "left": {
        1: ("1", lambda m, k, l, n: ZERO),
        2: ("alpha^m gamma^k", _left_row2),
        3: ("alpha*^n, gamma*^n", _left_row3),
        4: ("alpha*^m gamma*^l", _left_row4),
        5: ("alpha^m gamma*^l", _left_row5),
        6: ("alpha*^m gamma^k", _left_row6),
        7: ("p(gamma^k gamma*^l)", _left_row7),
        8: ("p(alpha^m gamma^k gamma*^l)", lambda m, k, l, n: lambda_mkl(m, k, l)),
        9: ("p(alpha*^m gamma^k gamma*^l)", lambda m, k, l, n: lambda_neg_mkl(m, k, l)),
    },
    "right": {
        1: ("1", lambda m, k, l, n: ZERO),
        2: ("alpha^m gamma^k", _right_row2),
        3: ("alpha^n, gamma^n", _right_row3),
        4: ("alpha*^m gamma*^l", _right_row4),
        5: ("alpha^m gamma*^l", _right_row5),
        6: ("alpha*^m gamma^k", _right_row6),
        7: ("p(gamma^k gamma*^l)", _right_row7),
        8: ("p(alpha^m gamma^k gamma*^l)", lambda m, k, l, n: lambda_hat_mkl(m, k, l)),
        9: ("p(alpha*^m gamma^k gamma*^l)", lambda m, k, l, n: lambda_hat_neg_mkl(m, k, l)),
    },
}


def classify_row(side: str, mono: Monomial) -> int:
    """Row of the side's table whose family contains ``mono``."""
    a, k, l = mono.a_power, mono.k, mono.l
    if mono.is_identity():
        return 1
    if check_side(side) == "left":
        if l == 0 and a >= 0:
            return 2
        if k == 0 and a <= 0 and (a == 0 or l == 0):
            return 3
        if k == 0 and a < 0:
            return 4
    else:
        if l == 0 and a >= 0 and (a == 0 or k == 0):
            return 3
        if l == 0 and a > 0:
            return 2
        if k == 0 and a <= 0:
            return 4
    if k == 0:
        return 5
    if l == 0:
        return 6
    if a == 0:
        return 7
    return 8 if a > 0 else 9


@dataclass(frozen=True)
class TableEntry:
    side: str
    row: int
    family: str
    value: ScalarQ


def table_entry(side: str, mono: Monomial) -> TableEntry:
    row = classify_row(side, mono)
    family, formula = ROWS[side][row]
    value = formula(abs(mono.a_power), mono.k, mono.l, mono.degree)
    return TableEntry(side=side, row=row, family=family, value=value)


def row5_growth_decomposition(m: int, l: int) -> ScalarQ:
    """Constant-plus-growth rewrite of the left row-5 eigenvalue of α^mγ*^l."""
    n = m - l
    one_minus = (ONE - _q(2)) * (ONE - _q(2))
    constant = -(_q(2) + _q(6) + 2 * _q(2 * n + 4)) / (2 * one_minus)
    growth = _q(2) * (ONE + _q(2)) / (2 * one_minus)
    return constant + growth * (_q(-2 * l) + _q(2 * m + 2))


def classical_value(side: str, mono: Monomial) -> Fraction:
    """The row value at q = 1."""
    return table_entry(side, mono).value.evaluate(Fraction(1))
