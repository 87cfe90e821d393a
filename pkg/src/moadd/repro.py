"""Regenerate the carry tables, the base-10 worked example, the throughput
curves and the simulation results as CSV text."""
from __future__ import annotations

from importlib import resources

from . import carry
from .cost import throughput_curve
from .engines import parallel_add, serial_add_alg1, serial_add_alg2
from .radix import AddProblem, digit_count, from_value, oracle_sum
from .reconfig import execute_plan, plan

TABLE1_ROWS = {
    "a": [(10, 2), (10, 4), (16, 10), (16, 15)],
    "b": [(2, 5), (2, 7), (10, 11), (10, 18), (16, 20), (16, 33)],
    "c": [(2, 4), (2, 12), (10, 20), (10, 50), (16, 16), (16, 48)],
}

TABLE2_ROWS = [
    (2, 2, 3), (2, 4, 3), (2, 7, 3), (2, 7, 5), (2, 10, 3), (2, 64, 3),
    (10, 2, 3), (10, 4, 3), (10, 10, 3), (10, 15, 4), (10, 1112, 3),
    (16, 2, 3), (16, 4, 3), (16, 18, 3), (16, 65520, 2),
]

TABLE3_ROWS = [(2, 3, 15), (2, 3, 16), (2, 3, 19)]


def _s(value: int, k: int, width: int | None = None) -> str:
    v = from_value(value, k)
    return (v.padded(width) if width else v).to_string()


def _csv(header: str, rows) -> str:
    return "\n".join([header, *(",".join(str(c) for c in r) for r in rows)]) + "\n"


def _split(n: int, m: int, k: int) -> tuple[int, int]:
    z = n * (k ** m - 1)
    return divmod(z, k ** m)


def table1(part: str | None = None) -> str:
    parts = [part] if part else ["a", "b", "c"]
    rows = []
    for pt in parts:
        for k, n in TABLE1_ROWS[pt]:
            c, s = _split(n, 1, k)
            rows.append((pt, k, n, 1, _s(c, k), _s(s, k, 1), n // k, _s(c, k), c,
                         carry.single_column_carry_cases(n, k)))
    return _csv("part,k,N,M,Z_C,Z_S,n,C_k,C,C_UB", rows)


def table2() -> str:
    rows = []
    for k, n, m in TABLE2_ROWS:
        c, s = _split(n, m, k)
        assert c == carry.max_total_carry(n, m, k)
        rows.append((k, n, m, _s(c, k), _s(s, k, m), _s(c, k), c, carry.carry_upper_bound(n)))
    return _csv("k,N,M,Z_C,Z_S,C_k,C,C_UB", rows)


def table3() -> str:
    rows = []
    for k, m, n in TABLE3_ROWS:
        p = digit_count(n, k) - 1
        c, s = _split(n, m, k)
        rows.append((k, m, _s(k ** m - 1, k), n, _s(n, k), p, _s(k ** p, k),
                     _s(c, k), _s(s, k, m), n * (k ** m - 1)))
    return _csv("k,M,kM_minus_1,N,N_k,p,k_p,Z_C,Z_S,Z_10", rows)


def fig2() -> str:
    """Column-by-column view of sixteen 9999s in base 10."""
    k, n, m = 10, 16, 4
    problem = AddProblem.all_max(n, m, k)
    total_cols = carry.result_width(n, m, k)
    rows = []
    carry_in = 0
    for i in range(total_cols):
        dsum = sum(problem.column(i))
        t = dsum + carry_in
        rows.append((i, dsum, carry_in, t, t % k, t // k))
        carry_in = t // k
    assert carry_in == 0
    z = oracle_sum(problem)
    rows.append(("Z", "", "", "", z.to_string(), ""))
    return _csv("column,digit_sum,carry_in,total,sum_digit,carry_out", rows)


def fig9(r_t: int = 17, area_ratios=(12, 20), periods: int = 20) -> str:
    rows = []
    for t, par, serial in throughput_curve(r_t, area_ratios, r_t * periods, step=r_t):
        rows.append((t, par, *serial))
    header = "T,ops_parallel," + ",".join(f"ops_serial_ra{r}" for r in area_ratios)
    return _csv(header, rows)


def sec9() -> str:
    rows = []
    cases = [
        ("4x4", AddProblem.from_values([0xA, 0xF, 0x1, 0x2], 4, 2)),
        ("4x16", AddProblem.from_values([0xA234, 0xFFFF, 0x0A2D, 0xFF7F], 16, 2)),
    ]
    for name, prob in cases:
        for fn in (serial_add_alg1, serial_add_alg2, parallel_add):
            t = fn(prob)
            luts = " ".join(str(x) for x in t.lut_outputs)
            rows.append((name, t.engine, luts, f"{t.result.value:X}",
                         t.clocks_used, carry.result_width(prob.n_operands, prob.width, 2)))
    p16 = plan(16, 16)
    for label, vals in (("16x16-max", [0xFFFF] * 16), ("16x16-ramp", [0x1111 * (i % 16) for i in range(16)])):
        log = execute_plan(p16, vals)
        rows.append((label, "reconfig", "", f"{log.result.value:X}", p16.latency("parallel"),
                     carry.result_width(16, 16, 2)))
    return _csv("case,engine,lut_outputs,result_hex,clocks,result_bits", rows)


TARGETS = {
    "table1": table1,
    "table1a": lambda: table1("a"),
    "table1b": lambda: table1("b"),
    "table1c": lambda: table1("c"),
    "table2": table2,
    "table3": table3,
    "fig2": fig2,
    "fig9": fig9,
    "sec9": sec9,
}


def repro(target: str) -> str:
    try:
        return TARGETS[target]()
    except KeyError:
        raise ValueError(f"unknown repro target {target!r}; choose from {', '.join(TARGETS)}") from None


def golden(target: str) -> str:
    return resources.files("moadd").joinpath("golden", f"{target}.csv").read_text()
