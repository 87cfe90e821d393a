"""
LUT adder versus a tree of carry-lookahead adders
=================================================

Gate delay and area in unit two-input gates.  With few operands the CLA is
as good or better; with many the LUT plan is faster.
"""

from moadd.cost import cla_adder_cost, lut_adder_cost, performance_advantage

###############################################################################
# Sweep the operand count at 16-bit width.
print(" N  LUT(d,a)      CLA(d,a)      CLA/LUT delay")
for n in (2, 3, 4, 8, 16, 32, 64):
    lut, cla = lut_adder_cost(n, 16), cla_adder_cost(n, 16)
    print(f"{n:2d}  ({lut.gate_delay:3d},{lut.gate_area:5d})  ({cla.gate_delay:3d},{cla.gate_area:5d})"
          f"  {float(performance_advantage(n, 16)):.2f}")

###############################################################################
# Area is not a clean win: at narrow widths and between powers of four the
# LUT plan carries padding overhead.
for n, m in ((16, 4), (17, 8), (16, 16)):
    print(n, m, lut_adder_cost(n, m).gate_area, "vs", cla_adder_cost(n, m).gate_area)
