"""Command-line front end: ``moadd <subcommand> ...``."""
from __future__ import annotations

import argparse
import csv
import re
import sys
from fractions import Fraction

from . import carry, cost, engines, lut, neuron, reconfig, repro
from .errors import AdderError
from .radix import from_value, oracle_sum, read_operand_file


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _decimal(x: Fraction) -> str:
    """Exact decimal for dyadic fractions, ``p/q`` otherwise."""
    den = x.denominator
    if den & (den - 1):
        return f"{x.numerator}/{den}"
    digits = den.bit_length() - 1
    if digits == 0:
        return str(x.numerator)
    scaled = x.numerator * 5 ** digits
    whole, frac = divmod(scaled, 10 ** digits)
    return f"{whole}.{frac:0{digits}d}".rstrip("0").rstrip(".")


def cmd_bounds(a) -> str:
    prof = carry.carry_profile(a.operands, a.width, a.base)
    return prof.CSV_HEADER + "\n" + prof.csv_row() + "\n"


def cmd_transition(a) -> str:
    n_star = carry.column_transition(a.width, a.base, a.order)
    off = carry.transition_offset(a.width, a.base, a.order)
    coeff = "".join(from_value(d, a.base).to_string() for d in carry.transition_coefficients(a.width, a.base, a.order))
    return f"M,k,p,N_star,offset,coefficients\n{a.width},{a.base},{a.order},{n_star},{off},{coeff}\n"


def cmd_add(a) -> str:
    prob = read_operand_file(a.input, a.base)
    if a.engine == "oracle":
        return oracle_sum(prob).to_string() + "\n"
    bin_prob = prob.to_base2()
    if a.engine == "reconfig":
        p = reconfig.plan(bin_prob.n_operands, bin_prob.width)
        total = reconfig.execute_plan(p, bin_prob.operands).result.value
    else:
        total = engines.run_engine(a.engine, bin_prob).result.value
    return from_value(total, prob.base).to_string() + "\n"


def cmd_trace(a) -> str:
    prob = read_operand_file(a.input, a.base).to_base2()
    return engines.run_engine(a.engine, prob).to_csv()


def cmd_netlist(a) -> str:
    nl = lut.ones_count_netlist(a.inputs)
    return nl.to_json() + "\n" if a.format == "json" else nl.to_dot(f"ones_count{a.inputs}")


def cmd_plan(a) -> str:
    p = reconfig.plan(a.operands, a.width, final_merge=a.final_merge)
    return p.to_json() + "\n" if a.format == "json" else p.to_dot()


_RANGE = re.compile(r"^([NM])=(\d+)(?:\.\.(\d+))?$")


def _parse_sweep(tokens) -> dict[str, range]:
    grid = {"N": range(2, 65), "M": range(1, 33)}
    for tok in tokens:
        mt = _RANGE.match(tok)
        if not mt:
            raise AdderError(f"bad sweep term {tok!r}; expected e.g. N=2..64")
        lo = int(mt.group(2))
        hi = int(mt.group(3) or lo)
        if hi < lo:
            raise AdderError(f"empty range in {tok!r}")
        grid[mt.group(1)] = range(lo, hi + 1)
    return grid


def cmd_cost(a) -> str:
    grid = _parse_sweep(a.sweep)
    rows = cost.cost_sweep(grid["N"], grid["M"])
    return "\n".join([cost.CostReport.CSV_HEADER, *(r.csv_row() for r in rows)]) + "\n"


def cmd_throughput(a) -> str:
    ratios = [Fraction(x) for x in a.ra.split(",")]
    rows = ["T,R_A,ops_parallel,ops_serial,winner"]
    step = a.step or a.rt
    for t in range(step, a.horizon + 1, step):
        for r in ratios:
            res = cost.throughput_compare(cost.ThroughputScenario.from_ratios(r, a.rt, t))
            if res.ops_serial_bank == res.ops_parallel:
                win = "tie"
            else:
                win = "serial" if res.serial_wins else "parallel"
            rows.append(f"{t},{r},{res.ops_parallel},{res.ops_serial_bank},{win}")
    return "\n".join(rows) + "\n"


def _numeric_rows(path):
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row or row[0].lstrip().startswith("#"):
                continue
            try:
                yield [Fraction(c.strip()) for c in row]
            except ValueError:
                continue    # header line


def cmd_neuron(a) -> str:
    fmt = neuron.FixedFormat(a.int_bits, a.frac_bits)
    out = ["inputs_hash,raw_sum_hex,y"]
    for row in _numeric_rows(a.input):
        if a.model == "arn":
            node = neuron.ArnNodeInput.from_values(row[1:], row[0], fmt)
            raw = neuron.arn_node_sum(node)
            y = neuron.arn_node_output(node)
            key = (node.k, *node.inputs)
        else:
            if len(row) != 2 * neuron.BATCH:
                raise AdderError(f"mlp rows need {2 * neuron.BATCH} values (16 inputs, 16 weights)")
            p = neuron.PerceptronInput.from_values(row[:16], row[16:], a.activation, fmt)
            s = neuron.perceptron_sum(p)
            raw = s.raw
            y = neuron.perceptron_output(p)
            key = (*p.inputs, *p.weights)
        out.append(f"{neuron.inputs_hash(key)},{raw:X},{_decimal(y)}")
    return "\n".join(out) + "\n"


def cmd_repro(a) -> str:
    return repro.repro(a.target)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="moadd", description="Multi-operand adder analysis and simulation")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=fn)
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")
        return sp

    sp = add("bounds", cmd_bounds, "carry profile of an N x M problem in base k")
    sp.add_argument("-k", "--base", type=int, required=True)
    sp.add_argument("-N", "--operands", type=int, required=True)
    sp.add_argument("-M", "--width", type=int, required=True)

    sp = add("transition", cmd_transition, "operand count at which the carry gains a column")
    sp.add_argument("-k", "--base", type=int, required=True)
    sp.add_argument("-M", "--width", type=int, required=True)
    sp.add_argument("-p", "--order", type=int, required=True)

    sp = add("add", cmd_add, "sum an operand file")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("-k", "--base", type=int)
    sp.add_argument("--engine", default="oracle",
                    choices=["oracle", "alg1", "alg2", "parallel", "reconfig"])

    sp = add("trace", cmd_trace, "per-clock trace of a LUT adder engine")
    sp.add_argument("--engine", required=True, choices=["alg1", "alg2", "parallel"])
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("-k", "--base", type=int)
    sp.add_argument("--out", default="csv", choices=["csv"], help="output format")

    sp = add("netlist", cmd_netlist, "ones-count netlist")
    sp.add_argument("--inputs", type=int, required=True)
    sp.add_argument("--format", default="json", choices=["json", "dot"])

    sp = add("plan", cmd_plan, "reconfiguration plan for an N x M adder")
    sp.add_argument("--operands", type=int, required=True)
    sp.add_argument("--width", type=int, required=True)
    sp.add_argument("--format", default="json", choices=["json", "dot"])
    sp.add_argument("--final-merge", default="4x4", choices=["4x4", "2x4"])

    sp = add("cost", cmd_cost, "LUT vs CLA delay/area sweep")
    sp.add_argument("--sweep", nargs="*", default=[], metavar="N=lo..hi")
    sp.add_argument("--format", default="csv", choices=["csv"])

    sp = add("throughput", cmd_throughput, "serial bank vs parallel unit throughput")
    sp.add_argument("--rt", type=int, required=True, help="serial/parallel clock ratio")
    sp.add_argument("--ra", required=True, help="comma-separated area ratios")
    sp.add_argument("--horizon", type=int, required=True)
    sp.add_argument("--step", type=int, default=0, help="horizon step (default: rt)")

    sp = add("neuron", cmd_neuron, "ARN node or 16-input perceptron over a CSV of vectors")
    sp.add_argument("--model", required=True, choices=["arn", "mlp"])
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--out", default="csv", choices=["csv"], help="output format")
    sp.add_argument("--activation", default="identity", choices=sorted(neuron.ACTIVATIONS))
    sp.add_argument("--int-bits", type=int, default=8)
    sp.add_argument("--frac-bits", type=int, default=8)

    sp = add("repro", cmd_repro, "regenerate a table or figure as CSV")
    sp.add_argument("target", choices=sorted(repro.TARGETS))
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        text = args.func(args)
        _write(text, args.output)
    except (AdderError, ValueError, OSError) as exc:
        print(f"moadd: error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
