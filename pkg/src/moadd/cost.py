"""Unit-gate cost of LUT-based vs CLA multi-operand adders, and the
serial-bank vs parallel-unit throughput model.

The LUT adder is costed from an actual gate netlist: each four-operand
module is one ones-count cell per column plus the chain of restricted
3-bit adders that merges the shifted column sums, and modules are wired
as :func:`moadd.reconfig.plan` lays them out.  Area is the gate count;
delay is the longest input-to-output path, found by propagating arrival
times through the composed modules.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidScenarioError, NotAnAdditionError, InvalidWidthError
from .lut import Netlist, NetlistBuilder, _topo_order, netlist_metrics, ones_count_netlist
from .reconfig import AdderPlan, plan

LUT_CELL = (4, 25)       # depth, area of the 4-input ones-count cell
CLA_BLOCK = (9, 50)      # depth, area of a two-operand 4-bit CLA


@dataclass(frozen=True)
class CostReport:
    adder_kind: str
    n_operands: int
    width: int
    gate_delay: int
    gate_area: int

    CSV_HEADER = "kind,N,M,delay,area"

    def csv_row(self) -> str:
        return f"{self.adder_kind},{self.n_operands},{self.width},{self.gate_delay},{self.gate_area}"


def _check(n: int, m: int) -> None:
    if n < 2:
        raise NotAnAdditionError(f"N={n}")
    if m < 1:
        raise InvalidWidthError(f"M={m}")


def _add_bits(b: NetlistBuilder, xs: list[str], ys: list[str], nbits: int) -> list[str]:
    """Ripple addition truncated to ``nbits`` result bits (the caller knows the bound)."""
    out = []
    carry = None
    for j in range(nbits):
        terms = [t for t in (xs[j] if j < len(xs) else None,
                             ys[j] if j < len(ys) else None, carry) if t is not None]
        last = j == nbits - 1
        if not terms:
            raise ValueError("result bit with no driver")
        if len(terms) == 1:
            out.append(terms[0])
            carry = None
        elif len(terms) == 2:
            out.append(b.xor(*terms))
            carry = None if last else b.and_(*terms)
        else:
            if last:
                out.append(b.xor(b.xor(terms[0], terms[1]), terms[2]))
                carry = None
            else:
                s, carry = b.full_adder(*terms)
                out.append(s)
    return out


@lru_cache(maxsize=None)
def lut_module_netlist(n_inputs: int, width: int) -> Netlist:
    """A combinational ``n_inputs x width`` LUT adder module.

    Inputs are operand-major (``in{j}_{i}`` is bit i of operand j); outputs
    are ``width`` sum bits followed by the carry bits.
    """
    b = NetlistBuilder()
    ops = [[b.input(f"in{j}_{i}") for i in range(width)] for j in range(n_inputs)]
    cell = ones_count_netlist(n_inputs)
    lut_bits = n_inputs.bit_length()
    carry_bits = (n_inputs - 1).bit_length()
    step_bits = (n_inputs + n_inputs - 1).bit_length()
    out = []
    carry: list[str] = []
    for i in range(width):
        col = b.instance(cell, [ops[j][i] for j in range(n_inputs)])
        t = col if not carry else _add_bits(b, col, carry, step_bits)
        out.append(t[0])
        carry = t[1:1 + carry_bits]
    return b.build(out + carry)


def module_metrics(n_inputs: int, width: int) -> tuple[int, int]:
    return netlist_metrics(lut_module_netlist(n_inputs, width))


@lru_cache(maxsize=None)
def _module_timing(n_inputs: int, width: int):
    nl = lut_module_netlist(n_inputs, width)
    order = [(g.id, g.inputs) for g in _topo_order(nl)]
    return nl, order


def _propagate(n_inputs: int, width: int, arrivals: list[int]) -> list[int]:
    nl, order = _module_timing(n_inputs, width)
    t = dict(zip(nl.inputs, arrivals))
    for gid, srcs in order:
        t[gid] = 1 + max(t[s] for s in srcs)
    return [t[o] for o in nl.outputs]


def _plan_ports(p: AdderPlan, mod) -> tuple[int, int]:
    n_in = len(mod.inputs)
    return n_in, (n_in - 1).bit_length()


def lut_adder_netlist(n: int, m: int) -> Netlist:
    """Flat gate netlist of the whole N x M LUT adder (inputs operand-major)."""
    _check(n, m)
    p = plan(n, m)
    b = NetlistBuilder()
    operands = [[b.input(f"x{j}_{i}") for i in range(m)] for j in range(n)]
    ports: dict[tuple[str, str], list[str]] = {}
    zero = None

    def bits_of(src, width):
        nonlocal zero
        if src.kind == "operand":
            bits = operands[src.ref]
        elif src.kind == "zero":
            bits = []
        else:
            bits = ports[(src.ref, src.kind)]
        bits = list(bits[:width])
        if len(bits) < width:
            if zero is None:
                # constant 0 for padding: x AND NOT x
                zero = b.and_(operands[0][0], b.not_(operands[0][0]))
            bits += [zero] * (width - len(bits))
        return bits

    for mod in p.modules:
        n_in, cbits = _plan_ports(p, mod)
        srcs = []
        for s in mod.inputs:
            srcs += bits_of(s, mod.width)
        outs = b.instance(lut_module_netlist(n_in, mod.width), srcs)
        ports[(mod.id, "S")] = outs[:mod.width]
        ports[(mod.id, "C")] = outs[mod.width:]
    hi = bits_of(p.final_carry, p.carry_width)
    return b.build(ports[(p.final_sum, "S")] + hi)


def lut_adder_cost(n: int, m: int) -> CostReport:
    """Delay and area of the composed LUT adder.

    Zero-padded module inputs are treated as constants available at time 0
    and cost no gates (the flat netlist spends two gates on a constant).
    """
    _check(n, m)
    p = plan(n, m)
    area = 0
    ports: dict[tuple[str, str], list[int]] = {}

    def times(src, width):
        if src.kind == "operand":
            t = [0] * width
        elif src.kind == "zero":
            t = []
        else:
            t = ports[(src.ref, src.kind)][:width]
        return t + [0] * (width - len(t))

    for mod in p.modules:
        n_in, _ = _plan_ports(p, mod)
        arr = []
        for s in mod.inputs:
            arr += times(s, mod.width)
        out = _propagate(n_in, mod.width, arr)
        ports[(mod.id, "S")] = out[:mod.width]
        ports[(mod.id, "C")] = out[mod.width:]
        area += module_metrics(n_in, mod.width)[1]
    ends = ports[(p.final_sum, "S")] + times(p.final_carry, p.carry_width)
    return CostReport("LUT", n, m, max(ends), area)


def cla_adder_cost(n: int, m: int) -> CostReport:
    """A ceil(log2 N)-deep tree of two-operand CLAs built from chained 4-bit blocks."""
    _check(n, m)
    blocks = -(-m // 4)
    levels = math.ceil(math.log2(n))
    return CostReport("CLA", n, m, levels * CLA_BLOCK[0] * blocks, (n - 1) * CLA_BLOCK[1] * blocks)


def operation_totals(n: int, m: int, ops: int) -> tuple[int, int]:
    """Total gate delay of ``ops`` back-to-back additions on (CLA, LUT)."""
    if ops < 1:
        raise ValueError("ops must be >= 1")
    return cla_adder_cost(n, m).gate_delay * ops, lut_adder_cost(n, m).gate_delay * ops


def performance_advantage(n: int, m: int, ops: int = 1) -> Fraction:
    """CLA delay over LUT delay; above 1 the LUT adder is faster."""
    cla, lut = operation_totals(n, m, ops)
    return Fraction(cla, lut)


def _cost_row(args):
    n, m = args
    return [lut_adder_cost(n, m), cla_adder_cost(n, m)]


def sweep_workers() -> int:
    env = os.environ.get("MOADD_THREADS", "0")
    try:
        n = int(env)
    except ValueError:
        n = 0
    return n if n > 0 else (os.cpu_count() or 1)


def cost_sweep(ns, ms, workers: int | None = None) -> list[CostReport]:
    """Both adder kinds over an N x M grid, sorted by (kind, N, M)."""
    grid = [(n, m) for n in ns for m in ms]
    workers = sweep_workers() if workers is None else workers
    if workers > 1 and len(grid) > 8:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            chunks = list(ex.map(_cost_row, grid, chunksize=8))
    else:
        chunks = [_cost_row(g) for g in grid]
    rows = [r for chunk in chunks for r in chunk]
    return sorted(rows, key=lambda r: (r.adder_kind, r.n_operands, r.width))


# -- serial bank vs parallel unit -------------------------------------------

@dataclass(frozen=True)
class ThroughputScenario:
    area_serial: Fraction | int
    area_parallel: Fraction | int
    clocks_serial: int
    clocks_parallel: int
    horizon: int

    def __post_init__(self):
        if self.clocks_serial <= 0 or self.clocks_parallel <= 0:
            raise InvalidScenarioError("clock counts must be positive")
        if self.area_serial <= 0 or self.area_parallel <= 0:
            raise InvalidScenarioError("areas must be positive")
        if self.horizon < 0:
            raise InvalidScenarioError("horizon must be >= 0")
        if self.area_ratio <= 1 or self.time_ratio <= 1:
            raise InvalidScenarioError(
                "a parallel unit must be both larger and faster than a serial one")

    @property
    def area_ratio(self) -> Fraction:
        return Fraction(self.area_parallel) / Fraction(self.area_serial)

    @property
    def time_ratio(self) -> Fraction:
        return Fraction(self.clocks_serial, self.clocks_parallel)

    @classmethod
    def from_ratios(cls, r_a, r_t: int, horizon: int, clocks_parallel: int = 1):
        return cls(1, r_a, r_t * clocks_parallel, clocks_parallel, horizon)


@dataclass(frozen=True)
class ThroughputResult:
    ops_parallel: int
    ops_serial_bank: int
    serial_wins: bool


def throughput_compare(s: ThroughputScenario) -> ThroughputResult:
    """Operations finished within the horizon by one parallel unit and by the
    whole-unit count of serial units fitting in its area."""
    ops_p = s.horizon // s.clocks_parallel
    ops_s = math.floor(s.area_ratio) * (s.horizon // s.clocks_serial)
    return ThroughputResult(ops_p, ops_s, ops_s > ops_p)


def asymptotic_serial_wins(s: ThroughputScenario) -> bool:
    return s.area_ratio > s.time_ratio


def crossover_area_ratio(r_t):
    """Area ratio above which a serial bank out-produces the parallel unit."""
    if r_t <= 1:
        raise InvalidScenarioError(f"time ratio must exceed 1, got {r_t}")
    return r_t


def throughput_curve(r_t: int, area_ratios, horizon: int, step: int = 1):
    """Rows (T, ops_parallel, [ops_serial per area ratio]) for T = step, 2*step, ... horizon."""
    rows = []
    for t in range(step, horizon + 1, step):
        par = None
        serial = []
        for r_a in area_ratios:
            res = throughput_compare(ThroughputScenario.from_ratios(r_a, r_t, t))
            par = res.ops_parallel
            serial.append(res.ops_serial_bank)
        rows.append((t, par, serial))
    return rows
