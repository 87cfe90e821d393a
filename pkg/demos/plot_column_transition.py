"""
When does the carry grow a column?
==================================

Crossing N = k^p does not immediately add a carry column: a few more rows
fit before it does.  The offset has a closed form.
"""

from moadd.carry import carry_digit_count, column_transition, transition_coefficients, transition_offset

###############################################################################
# Three-bit operands, watching the carry width as N passes 16.
for n in range(14, 22):
    print(f"N={n:2d}  carry bits={carry_digit_count(n, 3, 2)}")

###############################################################################
# The jump lands at 16 + 3 = 19.
print("transition:", column_transition(3, 2, 4), "offset:", transition_offset(3, 2, 4),
      "coefficients:", transition_coefficients(3, 2, 4))

###############################################################################
# Wider operands leave less room, so the offset shrinks toward 1.
for m in range(1, 7):
    print(f"M={m}  N*={column_transition(m, 2, 6)}")
