"""
The pwt package solves the nonlinear Packing While Traveling problem:
choose items along a fixed route so that their profit minus the rent
paid for a vehicle slowed down by the carried weight is maximal.

First modules to look at:
    model     instances, selections and the objective
    dp        exact dynamic program with dominance pruning
    fptas     approximation scheme for the gain over empty travel
    instio    instance files (native and TTP benchmark formats)
    cli       the pwt command (solve, bench, generate, reduce-ssp,
              fcurve)

The hardness module builds subset-sum reduction instances and the
generate module builds seeded benchmark-like instances.

SPDX-License-Identifier: Apache-2.0
"""

try:
    from ._version import __version__

except ImportError:
    __version__ = None
