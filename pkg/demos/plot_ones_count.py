"""
A column-sum lookup table and its gate equivalent
=================================================

For one binary column the sum is the number of 1 bits.  A lookup table and a
small gate network compute the same thing.
"""

from moadd.lut import build_lut, eval_int, netlist_metrics, ones_count_netlist

###############################################################################
# The 4-input table, printed MSB first.
t = build_lut(4)
for x in range(16):
    print(format(x, "04b"), "->", t.lookup_bits(format(x, "04b")))

###############################################################################
# The gate network: 25 two-input gates, 4 deep.
nl = ones_count_netlist(4)
print("depth, area:", netlist_metrics(nl))
assert all(eval_int(nl, x) == t[x] for x in range(16))

###############################################################################
# Larger columns are built from full adders; cost grows roughly linearly.
for n in (5, 8, 12, 16, 20):
    print(n, "inputs:", netlist_metrics(ones_count_netlist(n)))
