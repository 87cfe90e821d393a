"""
A bank of slow adders versus one fast one
=========================================

For a fixed silicon budget, several small serial units can finish more work
than one parallel unit when their area advantage beats their speed deficit.
"""

from moadd.cost import ThroughputScenario, throughput_compare, throughput_curve

###############################################################################
# Parallel is 17x faster; it costs 12x or 20x the area of a serial unit.
for t, par, (s12, s20) in throughput_curve(17, (12, 20), 170, 17):
    print(f"T={t:3d}  parallel={par:3d}  12 serial={s12:3d}  20 serial={s20:3d}")

###############################################################################
# Off the common multiples the floor on finished jobs matters.
for t in (16, 17, 33, 34):
    r = throughput_compare(ThroughputScenario.from_ratios(20, 17, t))
    print(t, r)
