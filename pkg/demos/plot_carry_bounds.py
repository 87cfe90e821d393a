"""
How big can the carry get?
==========================

Adding N numbers produces a carry that can spill over several columns.
This walks through the worst case: every digit set to k - 1.
"""

from moadd.carry import (carry_digit_count, carry_upper_bound, max_single_column_carry,
                         max_total_carry, result_width)
from moadd.radix import AddProblem, oracle_sum, split_sum_carry

###############################################################################
# Sixteen rows of 9999 in base 10: the brute-force sum and its carry part.
p = AddProblem.all_max(16, 4, 10)
z = oracle_sum(p)
carry, low = split_sum_carry(z, 4)
print("sum of 16 x 9999 =", z.to_string(), " carry =", carry.to_string(), " low =", low.to_string())

###############################################################################
# The carry never exceeds N - 1, and the closed form hits the exact value.
for n in (2, 4, 16, 100, 1000):
    print(f"N={n:5d}  bound={carry_upper_bound(n):4d}  exact(M=4, k=10)={max_total_carry(n, 4, 10):4d}")

###############################################################################
# A single column loses one unit of carry every k rows.
print([max_single_column_carry(n, 10) for n in range(8, 24)])

###############################################################################
# How many extra result columns a binary adder needs.
for n, m in ((4, 4), (4, 16), (16, 16)):
    print(f"{n} operands of {m} bits: carry needs {carry_digit_count(n, m, 2)} bits,"
          f" result needs {result_width(n, m, 2)}")
