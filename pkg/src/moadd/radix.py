"""Radix-k digit vectors and the exact big-integer addition oracle.

Digits are stored little-endian: ``digits[i]`` is the coefficient of ``k**i``.
Python integers are unbounded, so the oracle is exact for any width.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidBaseError, InvalidWidthError, NotAnAdditionError

_DIGIT_CHARS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"


def _check_base(k: int) -> None:
    if not isinstance(k, int) or k < 2:
        raise InvalidBaseError(f"base must be an integer >= 2, got {k!r}")


@dataclass(frozen=True)
class DigitVec:
    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        _check_base(self.base)
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))
        if not self.digits:
            raise InvalidWidthError("a DigitVec needs at least one digit")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise InvalidBaseError(f"digit {d} out of range for base {self.base}")

    def __len__(self) -> int:
        return len(self.digits)

    def __int__(self) -> int:
        return to_value(self)

    @property
    def value(self) -> int:
        return to_value(self)

    def is_canonical(self) -> bool:
        return len(self.digits) == 1 or self.digits[-1] != 0

    def canonical(self) -> "DigitVec":
        digits = list(self.digits)
        while len(digits) > 1 and digits[-1] == 0:
            digits.pop()
        return DigitVec(self.base, tuple(digits))

    def padded(self, width: int) -> "DigitVec":
        """Zero-extend (never truncate) to ``width`` digits."""
        canon = self.canonical()
        if len(canon) > width:
            raise InvalidWidthError(f"{len(canon)} significant digits do not fit in width {width}")
        return DigitVec(self.base, canon.digits + (0,) * (width - len(canon)))

    def to_string(self) -> str:
        """Most-significant digit first, uppercase letters above 9 (``1C``, ``2ABDF``)."""
        if self.base > len(_DIGIT_CHARS):
            return ":".join(str(d) for d in reversed(self.digits))
        return "".join(_DIGIT_CHARS[d] for d in reversed(self.digits))

    def __str__(self) -> str:
        return self.to_string()


def from_value(value: int, k: int) -> DigitVec:
    _check_base(k)
    if value < 0:
        raise ValueError("negative values are not representable")
    if value == 0:
        return DigitVec(k, (0,))
    digits = []
    while value:
        value, d = divmod(value, k)
        digits.append(d)
    return DigitVec(k, tuple(digits))


def to_value(v: DigitVec) -> int:
    total = 0
    for d in reversed(v.digits):
        total = total * v.base + d
    return total


def parse_digits(text: str, k: int) -> DigitVec:
    """Parse a most-significant-first digit string such as ``"0A2D"``."""
    _check_base(k)
    text = text.strip()
    if not text:
        raise ValueError("empty digit string")
    if ":" in text:
        msd_first = [int(t) for t in text.split(":")]
    else:
        msd_first = []
        for ch in text.upper():
            d = _DIGIT_CHARS.find(ch)
            if d < 0 or d >= k:
                raise InvalidBaseError(f"invalid digit {ch!r} for base {k}")
            msd_first.append(d)
    return DigitVec(k, tuple(reversed(msd_first)))


def digit_count(value: int, k: int) -> int:
    """Number of base-k digits of ``value``; zero has one digit."""
    _check_base(k)
    n = 1
    while value >= k:
        value //= k
        n += 1
    return n


@dataclass(frozen=True)
class ColumnSum:
    """A column total split as ``total = base*carry + sum_digit``."""
    total: int
    carry: int
    sum_digit: int

    @classmethod
    def of(cls, total: int, k: int) -> "ColumnSum":
        _check_base(k)
        carry, s = divmod(total, k)
        return cls(total, carry, s)


@dataclass(frozen=True)
class AddProblem:
    base: int
    width: int
    operands: tuple[DigitVec, ...]

    def __post_init__(self):
        _check_base(self.base)
        if self.width < 1:
            raise InvalidWidthError(f"width must be >= 1, got {self.width}")
        ops = tuple(self.operands)
        if len(ops) < 2:
            raise NotAnAdditionError(f"need at least 2 operands, got {len(ops)}")
        fixed = []
        for op in ops:
            if op.base != self.base:
                raise InvalidBaseError(f"operand base {op.base} != problem base {self.base}")
            fixed.append(op.padded(self.width))
        object.__setattr__(self, "operands", tuple(fixed))

    @classmethod
    def from_values(cls, values: Iterable[int], width: int, base: int = 2) -> "AddProblem":
        return cls(base, width, tuple(from_value(v, base) for v in values))

    @classmethod
    def all_max(cls, n: int, width: int, base: int) -> "AddProblem":
        """The worst case: every digit of every operand is ``base - 1``."""
        top = DigitVec(base, (base - 1,) * width)
        return cls(base, width, (top,) * n)

    @property
    def n_operands(self) -> int:
        return len(self.operands)

    def values(self) -> list[int]:
        return [to_value(op) for op in self.operands]

    def column(self, i: int) -> tuple[int, ...]:
        """Digits of column ``i`` across all operands (zero past the width)."""
        if i >= self.width:
            return (0,) * len(self.operands)
        return tuple(op.digits[i] for op in self.operands)

    def to_base2(self) -> "AddProblem":
        """Re-express a power-of-two-radix problem as a binary one of equal value."""
        if self.base == 2:
            return self
        bits = self.base.bit_length() - 1
        if 1 << bits != self.base:
            raise InvalidBaseError(f"base {self.base} is not a power of two")
        return AddProblem.from_values(self.values(), self.width * bits, 2)


def oracle_sum(p: AddProblem) -> DigitVec:
    return from_value(sum(p.values()), p.base)


def split_sum_carry(z: DigitVec, width: int) -> tuple[DigitVec, DigitVec]:
    """Split ``z`` into (carry, sum): the low ``width`` digits and everything above."""
    if width < 1:
        raise InvalidWidthError("width must be >= 1")
    digits = z.digits + (0,) * max(0, width - len(z.digits))
    low = DigitVec(z.base, digits[:width])
    high = DigitVec(z.base, digits[width:] or (0,)).canonical()
    return high, low


def concat(carry: DigitVec, s: DigitVec) -> DigitVec:
    """Inverse of :func:`split_sum_carry`: ``{carry, s}``."""
    return DigitVec(s.base, s.digits + carry.digits).canonical()


def read_operand_file(path, base: int | None = None) -> AddProblem:
    """Read the ``base=<k> width=<M>`` operand format.

    The header may be omitted when ``base`` is given; width then defaults to
    the longest operand.
    """
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    return parse_operand_text(lines, base)


def parse_operand_text(lines: Sequence[str], base: int | None = None) -> AddProblem:
    lines = list(lines)
    width = None
    if lines and "=" in lines[0]:
        header = dict(tok.split("=", 1) for tok in lines[0].split())
        hbase = int(header["base"])
        if base is not None and base != hbase:
            raise InvalidBaseError(f"--base {base} disagrees with header base={hbase}")
        base = hbase
        width = int(header["width"]) if "width" in header else None
        lines = lines[1:]
    if base is None:
        raise InvalidBaseError("operand file has no header and no base was given")
    ops = [parse_digits(ln, base) for ln in lines]
    if width is None:
        width = max(len(op.canonical()) for op in ops) if ops else 1
    return AddProblem(base, width, tuple(ops))


def format_operand_text(p: AddProblem) -> str:
    rows = [f"base={p.base} width={p.width}"]
    rows += [op.to_string() for op in p.operands]
    return "\n".join(rows) + "\n"
