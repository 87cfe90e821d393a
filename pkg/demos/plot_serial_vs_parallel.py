"""
Serial and parallel LUT adders, clock by clock
==============================================

Two serial schedules and a combinational adder on the same inputs.
"""

from moadd.engines import parallel_add, serial_add_alg1, serial_add_alg2
from moadd.radix import AddProblem

###############################################################################
# Four hex digits: A + F + 1 + 2.
p = AddProblem.from_values([0xA, 0xF, 0x1, 0x2], 4)
t = serial_add_alg2(p)
print(t.to_csv())
print("LUT outputs per column:", t.lut_outputs)

###############################################################################
# Clock counts: one column per clock plus a flush, versus sweeping all
# result columns, versus one combinational step.
for fn in (serial_add_alg1, serial_add_alg2, parallel_add):
    t = fn(p)
    print(f"{t.engine:12s} result={t.result.value:X} clocks={t.clocks_used}")

###############################################################################
# Sixteen-bit operands take 17 clocks on the flushing schedule.
wide = AddProblem.from_values([0xA234, 0xFFFF, 0x0A2D, 0xFF7F], 16)
t = serial_add_alg2(wide)
print(f"{t.result.value:X} in {t.clocks_used} clocks, {t.result.value.bit_length()} bits")
