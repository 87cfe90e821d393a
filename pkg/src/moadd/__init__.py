"""Multi-operand addition: carry bounds, LUT adders, reconfigurable plans and cost models."""
from .errors import (AdderError, DomainViolation, InvalidBaseError, InvalidNetlistError,
                     InvalidScenarioError, InvalidWidthError, NotAnAdditionError,
                     TableTooLargeError, UnsupportedBaseError, UseReconfigError, WidthViolation)
from .radix import AddProblem, ColumnSum, DigitVec, digit_count, from_value, oracle_sum, parse_digits, to_value
from .carry import (CarryProfile, carry_digit_count, carry_profile, carry_upper_bound, column_transition,
                    max_single_column_carry, max_total_carry, result_width, transition_offset)
from .lut import LutTable, Netlist, build_lut, eval_netlist, netlist_metrics, ones_count_netlist
from .engines import AdderTrace, parallel_add, run_engine, serial_add_alg1, serial_add_alg2
from .reconfig import AdderPlan, execute_plan, plan, validate_no_overflow
from .cost import (CostReport, ThroughputScenario, cla_adder_cost, cost_sweep, lut_adder_cost,
                   performance_advantage, throughput_compare)
from .neuron import FixedFormat, arn_node_output, multi_operand_sum, perceptron_output
from .repro import TARGETS, golden

__version__ = "0.1.0"
