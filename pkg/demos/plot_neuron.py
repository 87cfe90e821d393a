"""
Neuron sums through the multi-operand adder
===========================================

A resonator node and a 16-input perceptron, both accumulating through the
16-operand reconfigured adder.
"""

import random

from moadd.neuron import (ArnNodeInput, PerceptronInput, arn_exact, arn_node_output,
                          perceptron_output, perceptron_sum)

###############################################################################
# The node output peaks at 1 when every input sits at k/2.
k = 10.0
for x in (0, 2.5, 5.0, 7.5, 10.0):
    print(x, arn_node_output(ArnNodeInput.from_values([x] * 16, k)))

###############################################################################
# Random inputs: rounded output against the exact rational value.
rng = random.Random(0)
node = ArnNodeInput.from_values([rng.uniform(0, k) for _ in range(40)], k)
print(float(arn_node_output(node)), float(arn_exact(node)))

###############################################################################
# A perceptron with relu.
p = PerceptronInput.from_values([rng.uniform(0, 4) for _ in range(16)],
                                [rng.uniform(0, 1) for _ in range(16)], "relu")
print("raw sum", hex(perceptron_sum(p).raw), "output", float(perceptron_output(p)))
