"""Neuron data paths whose summation runs through the reconfigured adder.

Values are unsigned fixed point.  Scaling and activations are applied
exactly with :class:`fractions.Fraction` after the integer sum, then rounded
once to the output format.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .errors import DomainViolation, NotAnAdditionError
from .reconfig import execute_plan, plan

BATCH = 16


@dataclass(frozen=True)
class FixedFormat:
    int_bits: int = 8
    frac_bits: int = 8

    @property
    def total_bits(self) -> int:
        return self.int_bits + self.frac_bits

    @property
    def ulp(self) -> Fraction:
        return Fraction(1, 1 << self.frac_bits)

    @property
    def max_raw(self) -> int:
        return (1 << self.total_bits) - 1

    def quantize(self, x) -> int:
        """Round to the nearest raw code (ties to even); raises when out of range."""
        raw = round(Fraction(x) * (1 << self.frac_bits))
        if raw < 0 or raw > self.max_raw:
            raise DomainViolation(f"{x} is outside the unsigned {self.int_bits}.{self.frac_bits} range")
        return raw

    def value(self, raw: int) -> Fraction:
        return Fraction(raw, 1 << self.frac_bits)


@lru_cache(maxsize=None)
def _plan(width: int):
    return plan(BATCH, width)


def multi_operand_sum(values: Sequence[int], width: int | None = None) -> int:
    """Sum unsigned integers through 16-operand reconfigured adders.

    Batches of 16 are summed by the adder; the partial sums are held and
    summed again the same way until one value remains.
    """
    vals = [int(v) for v in values]
    if not vals:
        return 0
    while True:
        w = max(1, max(v.bit_length() for v in vals)) if width is None else width
        partial = []
        for i in range(0, len(vals), BATCH):
            batch = vals[i:i + BATCH]
            if len(batch) == 1:
                partial.append(batch[0])
                continue
            partial.append(execute_plan(_plan(w), batch).result.value)
        if len(partial) == 1:
            return partial[0]
        vals, width = partial, None


# -- ARN node ---------------------------------------------------------------

@dataclass(frozen=True)
class ArnNodeInput:
    """Raw fixed-point inputs ``X_i`` and scale ``k`` (a resonance width, not a radix)."""
    inputs: tuple[int, ...]
    k: int
    fmt: FixedFormat = FixedFormat()

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(int(x) for x in self.inputs))
        if not self.inputs:
            raise NotAnAdditionError("an ARN node needs at least one input")
        if self.k <= 0:
            raise DomainViolation("k must be positive")
        for x in self.inputs:
            if x < 0 or x > self.k:
                raise DomainViolation(f"input {x} outside [0, k={self.k}]")

    @classmethod
    def from_values(cls, xs, k, fmt: FixedFormat = FixedFormat()) -> "ArnNodeInput":
        return cls(tuple(fmt.quantize(x) for x in xs), fmt.quantize(k), fmt)


def arn_terms(a: ArnNodeInput) -> list[int]:
    """Resonator terms X_i (k - X_i), at twice the fractional bits."""
    return [x * (a.k - x) for x in a.inputs]


def arn_node_sum(a: ArnNodeInput) -> int:
    terms = arn_terms(a)
    width = max(1, ((a.k // 2) * (a.k - a.k // 2)).bit_length())
    return multi_operand_sum(terms, width)


def arn_exact(a: ArnNodeInput) -> Fraction:
    """y = 4 / (N k^2) * sum X_i (k - X_i), exactly."""
    n = len(a.inputs)
    return Fraction(4 * sum(arn_terms(a)), n * a.k * a.k)


def arn_node_output(a: ArnNodeInput) -> Fraction:
    """Node output rounded to the input format's resolution; always in [0, 1]."""
    n = len(a.inputs)
    y = Fraction(4 * arn_node_sum(a), n * a.k * a.k)
    return a.fmt.value(round(y * (1 << a.fmt.frac_bits)))


# -- perceptron -------------------------------------------------------------

def _identity(x: Fraction) -> Fraction:
    return x


def _relu(x: Fraction) -> Fraction:
    return max(x, Fraction(0))


def _hard_sigmoid(x: Fraction) -> Fraction:
    return min(Fraction(1), max(Fraction(0), x / 6 + Fraction(1, 2)))


ACTIVATIONS: dict[str, Callable[[Fraction], Fraction]] = {
    "identity": _identity,
    "relu": _relu,
    "hard-sigmoid": _hard_sigmoid,
}


@dataclass(frozen=True)
class PerceptronInput:
    inputs: tuple[int, ...]
    weights: tuple[int, ...]
    activation: str = "identity"
    fmt: FixedFormat = FixedFormat()
    product_bits: int | None = None

    def __post_init__(self):
        if len(self.inputs) != len(self.weights):
            raise ValueError("inputs and weights differ in length")
        if len(self.inputs) != BATCH:
            raise ValueError(f"the perceptron has {BATCH} inputs, got {len(self.inputs)}")
        if self.activation not in ACTIVATIONS:
            raise ValueError(f"unknown activation {self.activation!r}")
        for v in (*self.inputs, *self.weights):
            if not 0 <= v <= self.fmt.max_raw:
                raise DomainViolation(f"raw value {v} does not fit {self.fmt.total_bits} bits")

    @property
    def product_width(self) -> int:
        return self.product_bits or 2 * self.fmt.total_bits

    @classmethod
    def from_values(cls, xs, ws, activation="identity", fmt: FixedFormat = FixedFormat(), **kw):
        return cls(tuple(fmt.quantize(x) for x in xs), tuple(fmt.quantize(w) for w in ws),
                   activation, fmt, **kw)


@dataclass(frozen=True)
class PerceptronSum:
    raw: int
    products: tuple[int, ...]
    saturated: tuple[int, ...] = field(default=())


def perceptron_sum(p: PerceptronInput) -> PerceptronSum:
    """Exact products, clipped to the product width (indices of clipped ones are
    reported), then summed by the 16-operand adder."""
    limit = (1 << p.product_width) - 1
    prods = []
    sat = []
    for i, (x, w) in enumerate(zip(p.inputs, p.weights)):
        v = x * w
        if v > limit:
            sat.append(i)
            v = limit
        prods.append(v)
    raw = execute_plan(_plan(p.product_width), prods).result.value
    return PerceptronSum(raw, tuple(prods), tuple(sat))


def perceptron_output(p: PerceptronInput) -> Fraction:
    s = perceptron_sum(p)
    x = Fraction(s.raw, 1 << (2 * p.fmt.frac_bits))
    return ACTIVATIONS[p.activation](x)


def inputs_hash(values: Sequence[int]) -> str:
    return hashlib.sha256(",".join(str(v) for v in values).encode()).hexdigest()[:12]
