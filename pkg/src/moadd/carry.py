"""Carry bounds for N-operand, M-column addition in base k.

Everything here is about the worst case, where every digit of every operand
is ``k - 1`` and the total is ``N * (k**M - 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidBaseError, InvalidWidthError, NotAnAdditionError
from .radix import ColumnSum, digit_count


def _check(n: int, m: int = 1, k: int = 2) -> None:
    if n < 2:
        raise NotAnAdditionError(f"N={n}: fewer than two operands is not an addition")
    if m < 1:
        raise InvalidWidthError(f"M={m}: width must be >= 1")
    if k < 2:
        raise InvalidBaseError(f"k={k}: base must be >= 2")


def carry_upper_bound(n: int) -> int:
    """The general bound on the carry of any N-operand addition: N - 1."""
    _check(n)
    return n - 1


def max_single_column_carry(n: int, k: int) -> int:
    _check(n, 1, k)
    return n * (k - 1) // k


def single_column_carry_cases(n: int, k: int) -> int:
    """Same value as :func:`max_single_column_carry`, by the three case formulas.

    N < k gives N - 1; N = nk gives N - n; N = nk + r with r > 0 gives N - 1 - n.
    Kept separate so the closed form can be checked against it.
    """
    _check(n, 1, k)
    q, r = divmod(n, k)
    if n < k:
        return n - 1
    if r == 0:
        return n - q
    return n - 1 - q


def single_column_sum(n: int, k: int) -> ColumnSum:
    """(C, S) of one column holding N copies of ``k - 1``."""
    return ColumnSum.of(n * (k - 1), k)


def max_total_carry(n: int, m: int, k: int) -> int:
    """Exact carry (the part above column M) of the all-maximal problem."""
    _check(n, m, k)
    km = k ** m
    return n * (km - 1) // km


def carry_digit_count(n: int, m: int, k: int) -> int:
    """Columns p needed to hold the worst-case carry."""
    return digit_count(max_total_carry(n, m, k), k)


def operand_count_digits(n: int, k: int) -> int:
    """Columns needed for the general N - 1 bound (an upper bound on p)."""
    return digit_count(carry_upper_bound(n), k)


def result_width(n: int, m: int, k: int) -> int:
    return m + carry_digit_count(n, m, k)


@dataclass(frozen=True)
class CarryProfile:
    n_operands: int
    width: int
    base: int
    upper_bound: int
    exact_max_carry: int
    carry_digits: int
    result_digits: int

    def csv_row(self) -> str:
        return ",".join(str(v) for v in (
            self.n_operands, self.width, self.base, self.upper_bound,
            self.exact_max_carry, self.carry_digits, self.result_digits))

    CSV_HEADER = "N,M,k,upper_bound,exact_max_carry,carry_digits,result_digits"


def carry_profile(n: int, m: int, k: int) -> CarryProfile:
    c = max_total_carry(n, m, k)
    p = digit_count(c, k)
    return CarryProfile(n, m, k, carry_upper_bound(n), c, p, m + p)


def transition_offset(m: int, k: int, p: int) -> int:
    """How many rows past ``k**p`` the carry needs its extra column.

    This is the smallest integer coefficient vector value satisfying
    ``offset * (k**M - 1) >= k**p``.
    """
    if m < 1:
        raise InvalidWidthError(f"M={m}: width must be >= 1")
    if k < 2:
        raise InvalidBaseError(f"k={k}: base must be >= 2")
    if p < 1:
        raise ValueError(f"p={p}: order must be >= 1")
    kp = k ** p
    return -(-kp // (k ** m - 1))


def column_transition(m: int, k: int, p: int) -> int:
    """Smallest N >= k**p whose worst-case carry needs p + 1 columns."""
    return k ** p + transition_offset(m, k, p)


def transition_coefficients(m: int, k: int, p: int) -> tuple[int, ...]:
    """Offset digits n_{p-1} .. n_0, most significant first (e.g. 0,0,1,1)."""
    off = transition_offset(m, k, p)
    digits = []
    for _ in range(p):
        off, d = divmod(off, k)
        digits.append(d)
    if off:
        # offset reaches k**p only when k**M - 1 == 1
        digits.append(off)
    return tuple(reversed(digits))


def add_row_step(n: int, k: int) -> tuple[int, int]:
    """Change (dC, dS) of a single all-maximal column going from N to N + 1 rows."""
    _check(n, 1, k)
    before = single_column_sum(n, k)
    after = single_column_sum(n + 1, k)
    return after.carry - before.carry, after.sum_digit - before.sum_digit
