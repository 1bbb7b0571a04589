"""Approximation scheme for the gain over travelling empty.

B itself cannot be approximated (see hardness), but the gain
B'(x) = B(x) - B(empty) can. The program of the dp module is run on
gains instead of benefits, and a state is only stored when no lighter
state falls into the same or a higher bucket floor(B'/r), with

    L = largest gain of packing one item alone
    r = epsilon * L / m

Per column at most one entry is kept per bucket, so a column never
holds more than m**2/epsilon + 1 entries, and the returned selection
has B'(x) >= (1 - epsilon) * max B'. When no single item has a
positive gain the empty selection is optimal and returned directly.

The scheme only uses that t(w) = 1/(v_max - nu*w) is increasing and
convex in w; any per-distance travel time with those properties would
do, but only this one is implemented.

Usage:
    from pwt import fptas
    selection, evaluation = fptas.fptas_solve(instance, 0.1)

SPDX-License-Identifier: Apache-2.0
"""

from dataclasses import dataclass
import logging
import math
import time

from . import dp
from . import model


@dataclass(frozen=True)
class FptasConfig:
    """epsilon, the best single-item gain L and the bucket width r.
    """

    epsilon: float
    best_gain: float
    scale: float

    @property
    def trivial(self):
        """True when the empty selection is optimal for B'."""
        return not self.best_gain > 0


def check_epsilon(epsilon):
    if not 0 < epsilon <= 1:
        raise ValueError("eps must be in (0,1]")


def compute_scale(instance, epsilon):
    """Derive L and r for instance and epsilon.
    """
    check_epsilon(epsilon)
    best = 0.0
    for pos, item in enumerate(instance.items):
        if not instance.selectable(item):
            continue

        single = model.Selection.from_positions(instance, (pos,))
        best = max(best, model.benefit(instance, single).gain)

    if best <= 0:
        return FptasConfig(epsilon=epsilon, best_gain=best, scale=0.0)

    return FptasConfig(epsilon=epsilon,
                       best_gain=best,
                       scale=epsilon * best / instance.m)


def rounded_dominates(candidate_benefit, candidate_weight, column, r):
    """True if a lighter entry of column is in the same or a higher
    bucket than candidate_benefit.

    column holds (weight, benefit) pairs (or ParetoEntry objects)
    sorted by weight and by benefit, as every column is, so only the
    heaviest lighter entry is compared.
    """
    for weight, value in reversed(column):
        if weight < candidate_weight:
            return (math.floor(value / r)
                    >= math.floor(candidate_benefit / r))

    return False


def fptas_solve(instance, epsilon, keep_negative=True):
    """Selection x with B'(x) >= (1 - epsilon) * max B'.

    Returns a dp.Solution that unpacks to (Selection, Evaluation).
    keep_negative=False drops states with a negative gain; such states
    are always dominated by the empty state, so the result is the
    same either way.
    """
    check_epsilon(epsilon)
    started = time.perf_counter()
    config = compute_scale(instance, epsilon)
    algo = f"fptas({epsilon:g})"

    if config.trivial:
        empty = model.Selection.empty(instance)
        _logger.debug("fptas %s: no item has a positive gain",
                      instance.name)
        return dp.Solution(selection=empty,
                           evaluation=model.benefit(instance, empty),
                           sizes=(1,),
                           algo=algo,
                           value=0.0,
                           column=dp.ParetoColumn.root(0.0))

    scale = config.scale

    def dominated(entry, kept):
        return rounded_dominates(entry.benefit, entry.weight, kept,
                                 scale)

    keep = None if keep_negative else _nonnegative
    column, sizes = dp.run_columns(instance, 0.0, dominated=dominated,
                                   keep=keep)
    best = column.best()
    selection = model.Selection.from_positions(instance,
                                               best.positions())

    _logger.debug("fptas %s: eps=%g L=%r r=%r value=%r peak=%d "
                  "in %.3fs",
                  instance.name, epsilon, config.best_gain, scale,
                  best.benefit, max(sizes),
                  time.perf_counter() - started)
    return dp.Solution(selection=selection,
                       evaluation=model.benefit(instance, selection),
                       sizes=sizes,
                       algo=algo,
                       value=best.benefit,
                       column=column)


def _nonnegative(entry):
    return entry.benefit >= 0


_logger = logging.getLogger("pwt.fptas")
