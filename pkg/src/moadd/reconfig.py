"""Compose an N-operand M-bit adder from 4-input adder modules.

Layout (16 operands, 16 bits gives the familiar U1..U7):

* sum units ``A[i][j]``: layer 1 takes the operands four at a time; layer
  i + 1 takes the S outputs of layer i four at a time, until one S remains.
* carry units ``C[i][j]``: from layer 2 on, the C outputs of the previous
  sum layer are added four at a time, and so are the S outputs of the
  previous carry layer.
* final unit ``B``: adds the last sum unit's C to the remaining carry-unit
  sums.  The result is ``{B.S, A[L][1].S}``.

Carry and final units are ``p`` bits wide, p being the worst-case carry
width, so their own carry outputs are always zero.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .carry import carry_digit_count, carry_upper_bound
from .engines import run_engine
from .errors import NotAnAdditionError, InvalidWidthError, WidthViolation
from .radix import AddProblem, DigitVec, from_value, to_value

MODULE_INPUTS = 4


@dataclass(frozen=True)
class Source:
    """Where a module input comes from: ``operand``, ``S``, ``C`` or ``zero``."""
    kind: str
    ref: int | str | None = None

    def label(self) -> str:
        if self.kind == "zero":
            return "0"
        if self.kind == "operand":
            return f"in[{self.ref}]"
        return f"{self.ref}.{self.kind}"


ZERO = Source("zero")


@dataclass(frozen=True)
class Module:
    id: str
    role: str          # sum | carry | final
    layer: int
    index: int
    width: int
    inputs: tuple[Source, ...]

    @property
    def kind(self) -> str:
        return f"{len(self.inputs)}x{self.width}"


@dataclass(frozen=True)
class AdderPlan:
    n_operands: int
    width: int
    layers: int
    carry_width: int
    modules: tuple[Module, ...]
    final_sum: str           # module whose S is the low part of the result
    final_carry: Source      # high part of the result

    def module(self, mid: str) -> Module:
        for m in self.modules:
            if m.id == mid:
                return m
        raise KeyError(mid)

    def units(self, role: str) -> list[Module]:
        return [m for m in self.modules if m.role == role]

    @property
    def sum_units(self):
        return self.units("sum")

    @property
    def carry_units(self):
        return self.units("carry")

    @property
    def final_carry_unit(self) -> Module | None:
        fin = self.units("final")
        return fin[0] if fin else None

    def depth(self) -> int:
        """Modules on the longest operand-to-result path."""
        d: dict[str, int] = {}
        for m in self.modules:
            d[m.id] = 1 + max((d[s.ref] for s in m.inputs if s.kind in ("S", "C")), default=0)
        ends = [self.final_sum]
        if self.final_carry.kind in ("S", "C"):
            ends.append(self.final_carry.ref)
        return max(d[e] for e in ends)

    def latency(self, engine: str = "parallel") -> int:
        """Clocks along the critical module path for the given module engine."""
        clocks = {}
        for m in self.modules:
            own = module_clocks(engine, len(m.inputs), m.width)
            clocks[m.id] = own + max(
                (clocks[s.ref] for s in m.inputs if s.kind in ("S", "C")), default=0)
        ends = [self.final_sum]
        if self.final_carry.kind in ("S", "C"):
            ends.append(self.final_carry.ref)
        return max(clocks[e] for e in ends)

    def to_dict(self) -> dict:
        return {
            "n_operands": self.n_operands,
            "width": self.width,
            "layers": self.layers,
            "modules": [
                {"id": m.id, "kind": m.kind, "role": m.role, "layer": m.layer,
                 "index": m.index, "inputs": [s.label() for s in m.inputs]}
                for m in self.modules
            ],
            "result": {"high": self.final_carry.label(), "low": f"{self.final_sum}.S"},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def to_dot(self) -> str:
        lines = ["digraph plan {", "  rankdir=TB;"]
        for m in self.modules:
            lines.append(f'  "{m.id}" [shape=box,label="{m.id}\\n{m.kind} {m.role}"];')
            for s in m.inputs:
                if s.kind in ("S", "C"):
                    lines.append(f'  "{s.ref}" -> "{m.id}" [label="{s.kind}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def module_clocks(engine: str, n_inputs: int, width: int) -> int:
    if engine == "parallel":
        return 1
    if engine in ("alg2", "serial-alg2"):
        return width + 1
    if engine in ("alg1", "serial-alg1"):
        return width + carry_digit_count(max(n_inputs, 2), width, 2)
    raise ValueError(f"unknown engine {engine!r}")


def _groups(items: list[Source], size: int) -> list[tuple[Source, ...]]:
    out = []
    for i in range(0, len(items), size):
        g = list(items[i:i + size])
        out.append(tuple(g + [ZERO] * (size - len(g))))
    return out


def plan(n: int, m: int, final_merge: str = "4x4") -> AdderPlan:
    """Lay out an N-operand M-bit adder.

    ``final_merge="2x4"`` uses a two-input final unit when it only has two
    addends, instead of a zero-padded four-input one.
    """
    if n < 2:
        raise NotAnAdditionError(f"N={n}")
    if m < 1:
        raise InvalidWidthError(f"M={m}")
    if final_merge not in ("4x4", "2x4"):
        raise ValueError(f"final_merge must be '4x4' or '2x4', got {final_merge!r}")
    pw = carry_digit_count(n, m, 2)
    modules: list[Module] = []

    def new(role, layer, index, width, inputs):
        mod = Module(f"U{len(modules) + 1}", role, layer, index, width, tuple(inputs))
        modules.append(mod)
        return mod

    # sum layers
    sum_layers: list[list[Module]] = []
    items = [Source("operand", i) for i in range(n)]
    layer = 1
    while True:
        units = [new("sum", layer, j + 1, m, g) for j, g in enumerate(_groups(items, MODULE_INPUTS))]
        sum_layers.append(units)
        if len(units) == 1:
            break
        items = [Source("S", u.id) for u in units]
        layer += 1
    n_layers = len(sum_layers)

    if n_layers == 1:
        return AdderPlan(n, m, 1, pw, tuple(modules), sum_layers[0][0].id,
                         Source("C", sum_layers[0][0].id))

    # carry layers
    prev_carry: list[Source] = []
    for layer in range(2, n_layers + 1):
        from_sums = [Source("C", u.id) for u in sum_layers[layer - 2]]
        nxt: list[Source] = []
        j = 0
        for pool in (from_sums, prev_carry):
            for g in _groups(pool, MODULE_INPUTS):
                live = [s for s in g if s.kind != "zero"]
                if len(live) == 1:
                    nxt.append(live[0])   # nothing to add; wire straight through
                    continue
                j += 1
                nxt.append(Source("S", new("carry", layer, j, pw, g).id))
        prev_carry = nxt

    # final merge
    top = sum_layers[-1][0]
    pending = [Source("C", top.id)] + prev_carry
    layer = n_layers + 1
    while len(pending) > 1:
        if len(pending) <= MODULE_INPUTS:
            size = 2 if (final_merge == "2x4" and len(pending) == 2) else MODULE_INPUTS
            unit = new("final", layer, 1, pw, _groups(pending, size)[0])
            pending = [Source("S", unit.id)]
        else:
            # more than four addends left: one extra carry layer first
            pending = [Source("S", new("carry", layer, j + 1, pw, g).id)
                       for j, g in enumerate(_groups(pending, MODULE_INPUTS))]
            layer += 1
    return AdderPlan(n, m, n_layers, pw, tuple(modules), top.id, pending[0])


@dataclass(frozen=True)
class ModuleResult:
    inputs: tuple[int, ...]
    s: int
    c: int


@dataclass
class ExecutionLog:
    plan: AdderPlan
    modules: dict[str, ModuleResult] = field(default_factory=dict)
    result: DigitVec | None = None
    final_carry: int = 0

    def s(self, mid: str) -> int:
        return self.modules[mid].s

    def c(self, mid: str) -> int:
        return self.modules[mid].c


def _module_sum(values: Sequence[int], width: int, engine: str) -> int:
    problem = AddProblem.from_values(values, width, 2)
    return run_engine(engine, problem).result.value


def execute_plan(p: AdderPlan, operands: Sequence[DigitVec | int],
                 engine: str = "parallel") -> ExecutionLog:
    """Evaluate every module in order, each one simulated by an adder engine."""
    vals = [to_value(o) if isinstance(o, DigitVec) else int(o) for o in operands]
    for o in operands:
        if isinstance(o, DigitVec) and o.base != 2:
            raise WidthViolation(f"reconfigured adders are binary; got base {o.base}")
    if len(vals) > p.n_operands:
        raise WidthViolation(f"{len(vals)} operands for a {p.n_operands}-operand plan")
    limit = 1 << p.width
    for i, v in enumerate(vals):
        if not 0 <= v < limit:
            raise WidthViolation(f"operand {i} = {v:#x} is wider than {p.width} bits")
    vals += [0] * (p.n_operands - len(vals))

    log = ExecutionLog(p)

    def fetch(src: Source) -> int:
        if src.kind == "zero":
            return 0
        if src.kind == "operand":
            return vals[src.ref]
        r = log.modules[src.ref]
        return r.s if src.kind == "S" else r.c

    for mod in p.modules:
        ins = tuple(fetch(s) for s in mod.inputs)
        for v in ins:
            if v >> mod.width:
                raise WidthViolation(f"{mod.id}: input {v} does not fit {mod.width} bits")
        total = _module_sum(ins, mod.width, engine)
        log.modules[mod.id] = ModuleResult(ins, total & ((1 << mod.width) - 1), total >> mod.width)

    log.final_carry = fetch(p.final_carry)
    low = log.modules[p.final_sum].s
    log.result = from_value((log.final_carry << p.width) | low, 2)
    return log


@dataclass(frozen=True)
class Violation:
    module: str
    port: str
    value: int
    bound: int

    def __str__(self) -> str:
        return f"{self.module}.{self.port}={self.value} exceeds {self.bound}"


def output_bounds(p: AdderPlan) -> dict[tuple[str, str], int]:
    """Worst-case value of every module output, propagated through the plan.

    Sum units carry at most inputs - 1; carry and final units have sums
    bounded by the total of their inputs' bounds and carries of exactly zero.
    """
    bound: dict[tuple[str, str], int] = {}

    def src_bound(s: Source) -> int:
        if s.kind == "zero":
            return 0
        if s.kind == "operand":
            return (1 << p.width) - 1
        return bound[(s.ref, s.kind)]

    for m in p.modules:
        total = sum(src_bound(s) for s in m.inputs)
        if m.role == "sum":
            live = sum(1 for s in m.inputs if s.kind != "zero")
            bound[(m.id, "C")] = min(total >> m.width, max(live - 1, 0))
            bound[(m.id, "S")] = min(total, (1 << m.width) - 1)
        else:
            bound[(m.id, "S")] = total
            bound[(m.id, "C")] = 0
    return bound


def validate_no_overflow(p: AdderPlan, log: ExecutionLog) -> list[Violation]:
    """Check a completed execution against the plan's static output bounds.

    For the 16x16 plan this covers U6.C = 0, U7.C = 0, U6.S <= 12,
    U5.C <= 3 and U7.S <= 15.  An empty list means no violation.
    """
    out = []
    for (mid, port), b in output_bounds(p).items():
        r = log.modules[mid]
        v = r.s if port == "S" else r.c
        if v > b:
            out.append(Violation(mid, port, v, b))
    limit = carry_upper_bound(p.n_operands)
    if log.final_carry > limit:
        out.append(Violation("result", "C", log.final_carry, limit))
    return out
