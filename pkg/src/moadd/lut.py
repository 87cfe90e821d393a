"""Column-sum LUT and its gate-level ones-count equivalent.

Bit vectors are little-endian lists of 0/1 throughout: ``bits[0]`` is the
LSB.  Gate ``kind`` is one of AND, OR, XOR (two inputs) or NOT (one input);
each gate is one unit of both depth and area.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Sequence

from .errors import InvalidNetlistError, TableTooLargeError, WidthViolation

MAX_LUT_INPUTS = 20

ARITY = {"AND": 2, "OR": 2, "XOR": 2, "NOT": 1}


@dataclass(frozen=True)
class LutTable:
    n_inputs: int
    n_outputs: int
    entries: tuple[int, ...]

    def __getitem__(self, pattern: int | str) -> int:
        if isinstance(pattern, str):
            pattern = int(pattern, 2)
        return self.entries[pattern]

    def lookup_bits(self, pattern: str) -> str:
        """``"1111" -> "100"``, MSB-first strings as in the printed table."""
        return format(self[pattern], f"0{self.n_outputs}b")


def build_lut(n: int) -> LutTable:
    if not 1 <= n <= MAX_LUT_INPUTS:
        raise TableTooLargeError(
            f"a {n}-input LUT is outside 1..{MAX_LUT_INPUTS}; table size grows as 2**N")
    entries = tuple(x.bit_count() for x in range(1 << n))
    return LutTable(n, n.bit_length(), entries)


@dataclass(frozen=True)
class Gate:
    id: str
    kind: str
    inputs: tuple[str, ...]


@dataclass(frozen=True)
class Netlist:
    gates: tuple[Gate, ...]
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]

    def __post_init__(self):
        ids = set(self.inputs)
        if len(ids) != len(self.inputs):
            raise InvalidNetlistError("duplicate primary input id")
        for g in self.gates:
            if g.kind not in ARITY:
                raise InvalidNetlistError(f"gate {g.id}: unknown kind {g.kind}")
            if len(g.inputs) != ARITY[g.kind]:
                raise InvalidNetlistError(f"gate {g.id}: {g.kind} takes {ARITY[g.kind]} inputs")
            if g.id in ids:
                raise InvalidNetlistError(f"duplicate node id {g.id}")
            ids.add(g.id)
        for g in self.gates:
            for src in g.inputs:
                if src not in ids:
                    raise InvalidNetlistError(f"gate {g.id}: undriven input {src}")
        for o in self.outputs:
            if o not in ids:
                raise InvalidNetlistError(f"undriven output {o}")

    def to_json(self) -> str:
        doc = {
            "gates": [{"id": g.id, "kind": g.kind, "in": list(g.inputs)} for g in self.gates],
            "inputs": list(self.inputs),
            "outputs": list(self.outputs),
        }
        return json.dumps(doc, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "Netlist":
        doc = json.loads(text)
        gates = tuple(Gate(g["id"], g["kind"], tuple(g["in"])) for g in doc["gates"])
        return cls(gates, tuple(doc["inputs"]), tuple(doc["outputs"]))

    def to_dot(self, name: str = "netlist") -> str:
        lines = [f"digraph {name} {{", "  rankdir=LR;"]
        for i in self.inputs:
            lines.append(f'  "{i}" [shape=circle];')
        for g in self.gates:
            lines.append(f'  "{g.id}" [shape=box,label="{g.kind}\\n{g.id}"];')
            for src in g.inputs:
                lines.append(f'  "{src}" -> "{g.id}";')
        for n, o in enumerate(self.outputs):
            lines.append(f'  "out{n}" [shape=doublecircle];')
            lines.append(f'  "{o}" -> "out{n}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _topo_order(nl: Netlist) -> list[Gate]:
    by_id = {g.id: g for g in nl.gates}
    ts = TopologicalSorter({g.id: [s for s in g.inputs if s in by_id] for g in nl.gates})
    try:
        return [by_id[i] for i in ts.static_order()]
    except CycleError as exc:
        raise InvalidNetlistError(f"combinational cycle: {exc.args[1]}") from None


def _apply(kind: str, vals: Sequence[int]) -> int:
    if kind == "AND":
        return vals[0] & vals[1]
    if kind == "OR":
        return vals[0] | vals[1]
    if kind == "XOR":
        return vals[0] ^ vals[1]
    return 1 - vals[0]


def eval_netlist(nl: Netlist, inputs: Sequence[int]) -> list[int]:
    if len(inputs) != len(nl.inputs):
        raise WidthViolation(f"netlist has {len(nl.inputs)} inputs, got {len(inputs)} bits")
    val = {name: int(b) & 1 for name, b in zip(nl.inputs, inputs)}
    for g in _topo_order(nl):
        val[g.id] = _apply(g.kind, [val[s] for s in g.inputs])
    return [val[o] for o in nl.outputs]


def eval_int(nl: Netlist, x: int) -> int:
    """Evaluate with the inputs packed little-endian into ``x``; returns packed outputs."""
    bits = [(x >> i) & 1 for i in range(len(nl.inputs))]
    out = eval_netlist(nl, bits)
    return sum(b << i for i, b in enumerate(out))


def arrival_depths(nl: Netlist) -> dict[str, int]:
    """Gate count on the longest path from any primary input to each node."""
    depth = {i: 0 for i in nl.inputs}
    for g in _topo_order(nl):
        depth[g.id] = 1 + max(depth[s] for s in g.inputs)
    return depth


def netlist_metrics(nl: Netlist) -> tuple[int, int]:
    """(depth, area) in unit gates."""
    depth = arrival_depths(nl)
    longest = max((depth[o] for o in nl.outputs), default=0)
    return longest, len(nl.gates)


@dataclass
class NetlistBuilder:
    """Incremental construction with auto-numbered gate ids."""
    prefix: str = "g"
    gates: list[Gate] = field(default_factory=list)
    inputs: list[str] = field(default_factory=list)

    def input(self, name: str) -> str:
        self.inputs.append(name)
        return name

    def gate(self, kind: str, *srcs: str) -> str:
        gid = f"{self.prefix}{len(self.gates)}"
        self.gates.append(Gate(gid, kind, tuple(srcs)))
        return gid

    def and_(self, a, b):
        return self.gate("AND", a, b)

    def or_(self, a, b):
        return self.gate("OR", a, b)

    def xor(self, a, b):
        return self.gate("XOR", a, b)

    def not_(self, a):
        return self.gate("NOT", a)

    def half_adder(self, a, b):
        return self.xor(a, b), self.and_(a, b)

    def full_adder(self, a, b, c):
        t = self.xor(a, b)
        s = self.xor(t, c)
        cy = self.or_(self.and_(a, b), self.and_(t, c))
        return s, cy

    def instance(self, sub: Netlist, sources: Sequence[str]) -> list[str]:
        """Inline a copy of ``sub`` driven by ``sources``; returns its output node ids."""
        if len(sources) != len(sub.inputs):
            raise WidthViolation("instance port count mismatch")
        rename = dict(zip(sub.inputs, sources))
        for g in sub.gates:
            rename[g.id] = self.gate(g.kind, *(rename[s] for s in g.inputs))
        return [rename[o] for o in sub.outputs]

    def build(self, outputs: Sequence[str]) -> Netlist:
        return Netlist(tuple(self.gates), tuple(self.inputs), tuple(outputs))


def _ones_count4() -> Netlist:
    # One independent cone per output bit, as the three output columns of the
    # 4x3 LUT are independent.  Depth 4, 25 gates.
    b = NetlistBuilder()
    a0, a1, a2, a3 = (b.input(f"x{i}") for i in range(4))

    # bit 0: parity, pair XORs in sum-of-products form
    n0, n1, n2, n3 = b.not_(a0), b.not_(a1), b.not_(a2), b.not_(a3)
    x01 = b.or_(b.and_(a0, n1), b.and_(n0, a1))
    x23 = b.or_(b.and_(a2, n3), b.and_(n2, a3))
    s0 = b.xor(x01, x23)

    # bit 1: at least two ones, and not all four
    p01, p23 = b.and_(a0, a1), b.and_(a2, a3)
    cross = b.and_(b.or_(a0, a1), b.or_(a2, a3))
    at_least_two = b.or_(b.or_(p01, p23), cross)
    not_four = b.or_(b.not_(p01), b.not_(p23))
    s1 = b.and_(at_least_two, not_four)

    # bit 2: all four
    s2 = b.and_(b.and_(a0, a1), b.and_(a2, a3))
    return b.build([s0, s1, s2])


def _ones_count_tree(n: int) -> Netlist:
    """Full-adder (3:2) reduction of n equal-weight bits to a binary count."""
    b = NetlistBuilder()
    cols: list[list[str]] = [[b.input(f"x{i}") for i in range(n)]]
    out = []
    w = 0
    while w < len(cols):
        col = cols[w]
        while len(col) > 1:
            if len(cols) == w + 1:
                cols.append([])
            if len(col) >= 3:
                s, cy = b.full_adder(col.pop(0), col.pop(0), col.pop(0))
            else:
                s, cy = b.half_adder(col.pop(0), col.pop(0))
            col.append(s)
            cols[w + 1].append(cy)
        out.append(col[0])
        w += 1
    return b.build(out[: n.bit_length()])


def ones_count_netlist(n: int) -> Netlist:
    if n < 1:
        raise InvalidNetlistError(f"ones-count needs at least one input, got {n}")
    if n == 4:
        return _ones_count4()
    return _ones_count_tree(n)
