"""The ten acceptance criteria, one test each, at their stated tolerances."""
import contextlib
import random
import time
from fractions import Fraction
from itertools import product

from conftest import ACCEPTANCE
from moadd import repro
from moadd.carry import column_transition, max_total_carry
from moadd.cost import (ThroughputScenario, cla_adder_cost, lut_adder_cost, performance_advantage,
                        throughput_compare)
from moadd.engines import parallel_add, run_engine, serial_add_alg2
from moadd.lut import build_lut, eval_int, netlist_metrics, ones_count_netlist
from moadd.neuron import ArnNodeInput, FixedFormat, arn_exact, arn_node_output
from moadd.radix import AddProblem, oracle_sum, split_sum_carry
from moadd.reconfig import execute_plan, plan, validate_no_overflow


@contextlib.contextmanager
def criterion(n, name, time_limit=None):
    start = time.perf_counter()
    try:
        yield
        took = time.perf_counter() - start
        if time_limit is not None:
            assert took < time_limit, f"took {took:.1f}s, limit {time_limit}s"
    except BaseException as exc:
        line = f"FAIL  {n:2d}. {name}: {exc}"
        ACCEPTANCE[n] = line
        print(line)
        raise
    line = f"PASS  {n:2d}. {name} ({time.perf_counter() - start:.2f}s)"
    ACCEPTANCE[n] = line
    print(line)


def test_01_carry_bound_suite():
    with criterion(1, "carry bound and exact max carry", time_limit=10):
        for k in (2, 8, 10, 16):
            for n in range(2, 65):
                for m in range(1, 6):
                    c, _ = split_sum_carry(oracle_sum(AddProblem.all_max(n, m, k)), m)
                    assert c.value <= n - 1
                    assert c.value == max_total_carry(n, m, k)


def test_02_table_reproduction():
    with criterion(2, "carry tables regenerated bit-exactly"):
        for target in ("table1a", "table1b", "table1c", "table2", "table3"):
            assert repro.repro(target) == repro.golden(target), target
        assert "16,65520,2,FEF0,10,FEF0,65264,65519" in repro.table2().splitlines()
        assert "2,3,111,19,10011,4,10000,10000,101,133" in repro.table3().splitlines()
        assert "c,16,48,1,2D,0,3,2D,45,45" in repro.table1().splitlines()


def _scan_transition(m, k, p):
    # first N >= k^p whose carry needs p + 1 digits, by repeated addition
    step = k**m - 1
    threshold = k ** (m + p)
    n = k**p
    z = n * step
    while z < threshold:
        n += 1
        z += step
    return n


def test_03_column_transition():
    with criterion(3, "column transition vs brute-force scan", time_limit=30):
        assert column_transition(3, 2, 4) == 19
        checked = 0
        for k in range(2, 17):
            for m in range(1, 7):
                p = 1
                while k**p <= 10**6:
                    assert column_transition(m, k, p) == _scan_transition(m, k, p), (k, m, p)
                    checked += 1
                    p += 1
        assert checked > 500


def test_04_golden_traces():
    with criterion(4, "simulation traces for the 4x4 and 4x16 examples"):
        small = AddProblem.from_values([0xA, 0xF, 0x1, 0x2], 4)
        t = serial_add_alg2(small)
        assert t.lut_outputs == (2, 3, 1, 2)
        assert t.result.value == 0x1C and t.clocks_used == 5
        assert t.per_clock[4].clock == 5 and t.per_clock[4].output_buffer == 0x1C
        wide = AddProblem.from_values([0xA234, 0xFFFF, 0x0A2D, 0xFF7F], 16)
        t = serial_add_alg2(wide)
        assert t.result.value == 0x2ABDF and t.clocks_used == 17
        assert len(t.result) <= 18
        for prob, want in ((small, 0x1C), (wide, 0x2ABDF)):
            pt = parallel_add(prob)
            assert pt.result.value == want and pt.clocks_used == 1


def test_05_engine_oracle_equivalence():
    with criterion(5, "engines and reconfig plan agree with the oracle", time_limit=60):
        engines = ("alg1", "alg2", "parallel")
        mismatches = 0
        for m in (1, 2, 3):
            p4 = plan(4, m)
            for vals in product(range(1 << m), repeat=4):
                prob = AddProblem.from_values(vals, m)
                want = oracle_sum(prob)
                mismatches += sum(run_engine(e, prob).result != want for e in engines)
                mismatches += execute_plan(p4, vals).result != want
        rng = random.Random(20240501)
        for m in (4, 8, 16):
            for _ in range(10_000):
                prob = AddProblem.from_values([rng.getrandbits(m) for _ in range(4)], m)
                want = oracle_sum(prob)
                mismatches += sum(run_engine(e, prob).result != want for e in engines)
        p16 = plan(16, 16)
        for _ in range(10_000):
            vals = [rng.getrandbits(16) for _ in range(16)]
            mismatches += execute_plan(p16, vals).result.value != sum(vals)
        assert mismatches == 0


def _fig10_violations(log):
    out = []
    if log.c("U6") != 0:
        out.append("C5")
    if log.c("U7") != 0:
        out.append("C6")
    if log.s("U6") > 12:
        out.append("S5")
    if log.c("U5") > 3:
        out.append("C4")
    if log.s("U7") > 15:
        out.append("S6")
    return out


def _group_operands(total):
    """Four 2-bit operands adding up to ``total`` (0..12)."""
    ops = []
    for _ in range(4):
        v = min(3, total)
        ops.append(v)
        total -= v
    return ops


def test_06_sixteen_operand_structure():
    with criterion(6, "16x16 module outputs never overflow"):
        # Width 2: every first-layer unit sees 4 operands; its (S, C) depends only on
        # their sum.  Check that on all 256 inputs, then run every combination of
        # the four group sums (13^4 classes) through the whole plan.
        unit = plan(4, 2)
        for vals in product(range(4), repeat=4):
            log = execute_plan(unit, vals)
            assert (log.c("U1"), log.s("U1")) == divmod(sum(vals), 4)
        p2 = plan(16, 2)
        bad = 0
        for sums in product(range(13), repeat=4):
            ops = [v for g in sums for v in _group_operands(g)]
            log = execute_plan(p2, ops)
            assert log.result.value == sum(sums)
            bad += bool(_fig10_violations(log)) + bool(validate_no_overflow(p2, log))
        p16 = plan(16, 16)
        rng = random.Random(10)
        for _ in range(10_000):
            log = execute_plan(p16, [rng.getrandbits(16) for _ in range(16)])
            bad += bool(_fig10_violations(log)) + bool(validate_no_overflow(p16, log))
        log = execute_plan(p16, [0xFFFF] * 16)
        bad += bool(_fig10_violations(log))
        assert bad == 0


def test_07_ones_count_netlist():
    with criterion(7, "4-input ones-count netlist depth 4 area 25"):
        nl = ones_count_netlist(4)
        assert netlist_metrics(nl) == (4, 25)
        assert all(eval_int(nl, x) == bin(x).count("1") == build_lut(4)[x] for x in range(16))


def test_08_serial_bank_throughput():
    with criterion(8, "serial bank vs parallel unit throughput"):
        for c in range(1, 51):
            r12 = throughput_compare(ThroughputScenario.from_ratios(12, 17, 17 * c))
            r20 = throughput_compare(ThroughputScenario.from_ratios(20, 17, 17 * c))
            assert (r12.ops_parallel, r12.ops_serial_bank, r12.serial_wins) == (17 * c, 12 * c, False)
            assert (r20.ops_parallel, r20.ops_serial_bank, r20.serial_wins) == (17 * c, 20 * c, True)
        grid = 0
        for r_a in range(2, 12):
            for t_s, t_p in ((3, 1), (5, 1), (6, 1), (8, 1), (10, 1), (7, 2), (9, 2), (10, 3), (22, 3), (20, 7)):
                s = ThroughputScenario(1, r_a, t_s, t_p, 4 * t_s * t_p)
                assert throughput_compare(s).serial_wins == (r_a > Fraction(t_s, t_p))
                grid += 1
        assert grid == 100


def test_09_cost_crossover():
    with criterion(9, "LUT vs CLA cost crossover"):
        from moadd.cost import CLA_BLOCK, LUT_CELL
        assert LUT_CELL == (4, 25) and CLA_BLOCK == (9, 50)
        assert netlist_metrics(ones_count_netlist(4)) == (4, 25)
        base = cla_adder_cost(2, 4)
        assert (base.gate_delay, base.gate_area) == (9, 50)
        for n in (2, 3, 4):
            assert performance_advantage(n, 4) <= Fraction(5, 4), n
        for n in range(16, 65):
            assert performance_advantage(n, 16) > 1, n
        lut, cla = lut_adder_cost(16, 16), cla_adder_cost(16, 16)
        assert lut.gate_area < cla.gate_area
        assert lut.gate_delay < cla.gate_delay


def test_10_arn_node():
    with criterion(10, "ARN node output within 2 ULP of the exact value"):
        fmt = FixedFormat()
        two_ulp = 2 * fmt.ulp
        rng = random.Random(2110)
        for _ in range(10_000):
            k = rng.randint(1, fmt.max_raw)
            n = rng.randint(1, 32)
            a = ArnNodeInput(tuple(rng.randint(0, k) for _ in range(n)), k, fmt)
            assert abs(arn_node_output(a) - arn_exact(a)) <= two_ulp
        for k in (2.0, 4.0, 17.5, 100.0):
            assert arn_node_output(ArnNodeInput.from_values([k / 2] * 16, k)) == 1
            assert arn_node_output(ArnNodeInput.from_values([0] * 16, k)) == 0
