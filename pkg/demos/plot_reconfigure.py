"""
Building a 16-operand adder from 4-operand modules
==================================================

Four first-layer units feed one unit that adds their low parts and one that
adds their carries; a last unit merges the carries.
"""

from moadd.reconfig import execute_plan, output_bounds, plan, validate_no_overflow

###############################################################################
# The wiring.
p = plan(16, 16)
for m in p.modules:
    print(m.id, m.kind, m.role, [s.label() for s in m.inputs])

###############################################################################
# Worst case input: every operand FFFF.
log = execute_plan(p, [0xFFFF] * 16)
print(f"result {log.result.value:X}")
for mid, r in log.modules.items():
    print(f"  {mid}: S={r.s:X} C={r.c}")

###############################################################################
# Static bounds say the carry and merge units can never overflow.
b = output_bounds(p)
print("carry unit S <=", b[("U6", "S")], " merge unit S <=", b[("U7", "S")])
print("violations:", validate_no_overflow(p, log))

###############################################################################
# Larger N just adds layers.
for n in (5, 16, 17, 64, 256):
    q = plan(n, 8)
    print(f"N={n:3d} layers={q.layers} modules={len(q.modules)} latency={q.latency('alg2')} clocks")
