"""Clock-accounted simulation of the LUT-based multi-operand adders.

Three engines over a binary :class:`~moadd.radix.AddProblem`:

* ``serial-alg1``: per column, N data bits plus the pending carry rows;
  each column's partial sum is parked as a new carry row.  One clock per
  result column, M + p clocks.
* ``serial-alg2``: per column, LUT output plus a single carry buffer; the
  LSB goes to the output buffer and the rest is shifted back into the carry
  buffer.  M column clocks plus one flush clock.
* ``parallel``: every column LUT at once and a shift-add reduction, 1 clock.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .carry import carry_digit_count
from .errors import DomainViolation, UnsupportedBaseError, UseReconfigError
from .lut import MAX_LUT_INPUTS, build_lut
from .radix import AddProblem, DigitVec, from_value

ENGINES = ("serial-alg1", "serial-alg2", "parallel")


@dataclass(frozen=True)
class ClockSnapshot:
    clock: int
    column: int | None
    lut_output: int | None
    carry_buffer: int
    output_buffer: int


@dataclass(frozen=True)
class AdderTrace:
    problem: AddProblem
    engine: str
    per_clock: tuple[ClockSnapshot, ...]
    clocks_used: int
    result: DigitVec
    lut_outputs: tuple[int, ...]

    CSV_HEADER = "clock,column,lut_out,carry_buffer,output_buffer_hex"

    def csv_rows(self) -> list[str]:
        rows = []
        for s in self.per_clock:
            col = "" if s.column is None else str(s.column)
            lut = "" if s.lut_output is None else str(s.lut_output)
            rows.append(f"{s.clock},{col},{lut},{s.carry_buffer},{s.output_buffer:X}")
        return rows

    def to_csv(self) -> str:
        return "\n".join([self.CSV_HEADER, *self.csv_rows()]) + "\n"


@lru_cache(maxsize=None)
def _lut(n: int):
    return build_lut(n)


def _column_patterns(p: AddProblem) -> list[int]:
    """Column i packed as an N-bit LUT address (operand j -> bit j)."""
    vals = p.values()
    pats = []
    for i in range(p.width):
        x = 0
        for j, v in enumerate(vals):
            x |= ((v >> i) & 1) << j
        pats.append(x)
    return pats


def _check(p: AddProblem) -> None:
    if p.base != 2:
        raise UnsupportedBaseError(f"LUT engines work on binary problems, got base {p.base}")
    if p.n_operands > MAX_LUT_INPUTS:
        raise UseReconfigError(
            f"{p.n_operands} operands exceed the {MAX_LUT_INPUTS}-input LUT; use reconfig.plan")


def restricted_3bit_add(lut_out: int, carry: int) -> int:
    """The 4x M adder's 3-bit adder: LUT output 0..4 plus carry 0..3.

    Only these 20 input pairs can occur, so the sum never exceeds 7.
    """
    if not (0 <= lut_out <= 4 and 0 <= carry <= 3):
        raise DomainViolation(f"({lut_out}, {carry}) is outside the 20-value domain")
    return lut_out + carry


def serial_add_alg1(p: AddProblem) -> AdderTrace:
    _check(p)
    lut = _lut(p.n_operands)
    pats = _column_patterns(p)
    ncols = p.width + carry_digit_count(p.n_operands, p.width, 2)
    rows: list[tuple[int, DigitVec]] = []   # (start column, bits) of pending carry rows
    out = 0
    snaps = []
    luts = []
    for i in range(ncols):
        lut_out = lut[pats[i]] if i < p.width else 0
        luts.append(lut_out)
        total = lut_out
        live = []
        for start, bits in rows:
            off = i - start
            if off < len(bits):
                total += bits.digits[off]
                if off + 1 < len(bits):
                    live.append((start, bits))
        out |= (total & 1) << i
        if total >> 1:
            live.append((i + 1, from_value(total >> 1, 2)))
        rows = live
        pending = sum(bits.value >> (i + 1 - start) for start, bits in rows)
        snaps.append(ClockSnapshot(i + 1, i, lut_out, pending, out))
    if rows:
        raise AssertionError("carry rows left after M + p columns")
    return AdderTrace(p, "serial-alg1", tuple(snaps), ncols, from_value(out, 2), tuple(luts[: p.width]))


def serial_add_alg2(p: AddProblem) -> AdderTrace:
    _check(p)
    lut = _lut(p.n_operands)
    restricted = p.n_operands == 4
    carry = 0
    out = 0
    snaps = []
    luts = []
    for i, pat in enumerate(_column_patterns(p)):
        lut_out = lut[pat]
        luts.append(lut_out)
        t = restricted_3bit_add(lut_out, carry) if restricted else lut_out + carry
        out |= (t & 1) << i
        carry = t >> 1
        snaps.append(ClockSnapshot(i + 1, i, lut_out, carry, out))
    out |= carry << p.width
    snaps.append(ClockSnapshot(p.width + 1, None, None, 0, out))
    return AdderTrace(p, "serial-alg2", tuple(snaps), p.width + 1, from_value(out, 2), tuple(luts))


def parallel_add(p: AddProblem) -> AdderTrace:
    _check(p)
    lut = _lut(p.n_operands)
    luts = tuple(lut[pat] for pat in _column_patterns(p))
    total = 0
    for i, l in enumerate(luts):
        total += l << i
    snap = ClockSnapshot(1, None, None, 0, total)
    return AdderTrace(p, "parallel", (snap,), 1, from_value(total, 2), luts)


def run_engine(engine: str, p: AddProblem) -> AdderTrace:
    try:
        fn = {"serial-alg1": serial_add_alg1, "alg1": serial_add_alg1,
              "serial-alg2": serial_add_alg2, "alg2": serial_add_alg2,
              "parallel": parallel_add}[engine]
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}") from None
    return fn(p)
