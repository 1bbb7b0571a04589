"""Subset-sum reductions to Packing While Traveling.

Deciding whether some selection reaches B(x) >= 0 is NP-hard, with or
without a binding capacity. Given values s_1..s_m and a target Q, both
reductions build a two-city instance (d_1 = 1) whose items have
p = w = s_k. The benefit of a selection of weight w is then the curve

    f(w) = w - R * t(w)

and the speeds and rent are chosen so that f is concave with its
unique maximum f(Q) = 0. Some x has B(x) >= 0 exactly when some
subset sums to Q.

reduce_capacitated uses W = Q, v_max = 2, v_min = 1, R = Q, so that
f(w) = w - Q/(2 - w/Q).

reduce_unconstrained uses the same curve with a capacity that never
binds. This needs v_min = 2 - W/Q > 0, so the subset-sum instance is
first normalised to one with the same answer and total < 2Q (see
normalized).

Since the sign of the optimum of B encodes a subset-sum answer, no
polynomial algorithm can guarantee any fixed ratio for B itself
unless P = NP. The fptas module approximates the gain B' instead.

SPDX-License-Identifier: Apache-2.0
"""

from dataclasses import dataclass
from itertools import combinations
import logging

import numpy as np

from . import model

CAPACITATED = "capacitated"
UNCONSTRAINED = "unconstrained"


@dataclass(frozen=True)
class SspInstance:
    """Positive integers values and a target with
    1 <= target <= sum(values).
    """

    values: tuple
    target: int

    def __post_init__(self):
        values = tuple(int(value) for value in self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise ValueError("no values")

        if min(values) < 1:
            raise ValueError("values must be positive")

        if not 1 <= self.target <= sum(values):
            raise ValueError(
                f"target {self.target} not in range 1-{sum(values)}")

    @property
    def total(self):
        return sum(self.values)


def normalized(ssp):
    """Equivalent instance whose total is below twice its target.

    Above twice the target the complement target total - Q is used.
    At exactly twice the target, values are doubled and a 1 is added
    with target 2Q + 1: by parity the 1 must be taken and the other
    values must sum to 2Q.
    """
    total = ssp.total
    if total < 2 * ssp.target:
        return ssp

    if total > 2 * ssp.target:
        return SspInstance(ssp.values, total - ssp.target)

    return SspInstance(tuple(2 * value for value in ssp.values) + (1,),
                       2 * ssp.target + 1)


def reduce_capacitated(ssp):
    """Instance with capacity Q whose optimum is >= 0 iff YES."""
    target = ssp.target
    return model.Instance(distances=(1.0,),
                          items=_items(ssp.values),
                          v_min=1.0,
                          v_max=2.0,
                          capacity=target,
                          rent=float(target),
                          name=f"ssp-capacitated-{target}")


def reduce_unconstrained(ssp):
    """Instance whose capacity holds every item and whose optimum is
    >= 0 iff YES.
    """
    norm = normalized(ssp)
    target = norm.target
    capacity = norm.total
    return model.Instance(distances=(1.0,),
                          items=_items(norm.values),
                          v_min=2.0 - capacity / target,
                          v_max=2.0,
                          capacity=capacity,
                          rent=float(target),
                          name=f"ssp-unconstrained-{target}")


def reduce(kind, ssp):
    if kind == CAPACITATED:
        return reduce_capacitated(ssp)

    if kind == UNCONSTRAINED:
        return reduce_unconstrained(ssp)

    raise ValueError(f"unknown reduction {kind!r}")


def curve_value(kind, ssp, weight):
    """f(w) of the instance reduce(kind, ssp) for real w in [0, W].
    """
    instance = reduce(kind, ssp)
    if not 0 <= weight <= instance.capacity:
        raise ValueError(
            f"weight {weight} not in range 0-{instance.capacity}")

    return weight - instance.rent * instance.unit_time(weight)


def curve_points(kind, ssp, points=None):
    """(w, f(w)) pairs: every integer w in 0..W, or points evenly
    spaced reals when points is given.
    """
    instance = reduce(kind, ssp)
    if points is None:
        weights = np.arange(instance.capacity + 1)
    else:
        weights = np.linspace(0.0, instance.capacity, points)

    values = weights - instance.rent / (instance.v_max
                                        - instance.nu * weights)
    return list(zip(weights.tolist(), values.tolist()))


def subset_sum_exists(ssp):
    """Meet-in-the-middle subset-sum decision."""
    half = len(ssp.values) // 2
    left = _subset_sums(ssp.values[:half])
    right = _subset_sums(ssp.values[half:])
    return any(ssp.target - value in right for value in left)


def decide(instance, tolerance=1e-9):
    """True when the best selection has B >= 0 (within tolerance)."""
    _, evaluation = model.brute_force(instance)
    _logger.debug("decide %s: max B=%r", instance.name,
                  evaluation.benefit)
    return evaluation.benefit >= -tolerance


def _items(values):
    return tuple(model.Item(city=1, profit=value, weight=value,
                            index=idx)
                 for idx, value in enumerate(values, start=1))


def _subset_sums(values):
    sums = set()
    for size in range(len(values) + 1):
        for combo in combinations(values, size):
            sums.add(sum(combo))

    return sums


_logger = logging.getLogger("pwt.hardness")
