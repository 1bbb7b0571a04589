"""Seeded benchmark-like instances.

Instances are built the way TTP benchmark instances are: a tour over
`cities` nodes at distinct random integer coordinates with CEIL_2D
distances, closed back to its first node (so n = cities), and a
knapsack instance whose items are spread over nodes 2..cities.

Knapsack families, with values drawn from value_range = (lo, hi) and
span = hi - lo:

    uncorrelated                  w, p uniform in [lo, hi]
    uncorrelated-similar-weights  p uniform in [lo, hi], w uniform in
                                  [lo + ceil(0.9 span), hi]
    bounded-strongly-correlated   w uniform, p = w + span//10
    multiple-strongly-correlated  w uniform, p = w + one of span//10,
                                  2 span//10, 3 span//10

Profits above hi are clamped to hi. Items go to the cities round-robin
or, with profit-sorted assignment, the k most profitable items go to
city 2, the next k to city 3 and so on. The capacity of class c is
ceil(c * total weight / 11).

The random numbers come from numpy's PCG64 bit generator seeded with
the GeneratorSpec seed, so equal GeneratorSpec values give equal
instances.

SPDX-License-Identifier: Apache-2.0
"""

from dataclasses import dataclass
import logging

import numpy as np

from . import model

SMALL_RANGE = (1, 10**3)
LARGE_RANGE = (1, 10**7)

V_MIN = 0.1
V_MAX = 1.0

FAMILIES = {"uncorrelated": "uncorr",
            "uncorrelated-similar-weights": "uncorr-s-w",
            "bounded-strongly-correlated": "b-s-corr",
            "multiple-strongly-correlated": "m-s-corr"}

ROUND_ROBIN = "round-robin"
PROFIT_SORTED = "profit-sorted"


@dataclass(frozen=True)
class GeneratorSpec:
    """Everything that determines a generated instance.

    family may be given by its long name or its short tag (uncorr,
    uncorr-s-w, b-s-corr, m-s-corr). per_city is the k of profit-sorted
    assignment. rent=None derives a renting ratio from the items.
    """

    family: str = "uncorrelated"
    m: int = 100
    value_range: tuple = SMALL_RANGE
    capacity_class: int = 1
    assignment: str = ROUND_ROBIN
    per_city: int = 1
    cities: int = 101
    seed: int = 0
    rent: float = None
    name: str = ""

    def __post_init__(self):
        tags = {tag: family for family, tag in FAMILIES.items()}
        family = tags.get(self.family, self.family)
        if family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

        object.__setattr__(self, "family", family)
        low, high = (int(value) for value in self.value_range)
        object.__setattr__(self, "value_range", (low, high))
        if not 1 <= low <= high:
            raise ValueError(f"bad value range {self.value_range}")

        if not 1 <= self.capacity_class <= 10:
            raise ValueError(f"capacity class {self.capacity_class} "
                             "not in range 1-10")

        if self.assignment not in (ROUND_ROBIN, PROFIT_SORTED):
            raise ValueError(f"unknown assignment {self.assignment!r}")

        if self.per_city < 1 or self.cities < 2 or self.m < 0:
            raise ValueError("need per_city >= 1, cities >= 2, m >= 0")

    @property
    def tag(self):
        return FAMILIES[self.family]

    @property
    def default_name(self):
        return f"{self.tag}_{self.capacity_class:02d}_m{self.m}"


def generate(spec):
    """Instance for spec."""
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    weights, profits = _knapsack(rng, spec)
    distances = _tour(rng, spec.cities)
    cities = _assign(spec, profits)

    total = sum(weights)
    capacity = max(1, -(-spec.capacity_class * total // 11))
    rent = spec.rent
    if rent is None:
        rent = _rent(profits, weights, capacity, distances)

    items = tuple(model.Item(city=city, profit=profit, weight=weight,
                             index=idx)
                  for idx, (city, profit, weight)
                  in enumerate(zip(cities, profits, weights), start=1))
    instance = model.Instance(distances=distances,
                              items=items,
                              v_min=V_MIN,
                              v_max=V_MAX,
                              capacity=capacity,
                              rent=rent,
                              name=spec.name or spec.default_name)
    _logger.debug("generated %s: seed=%d m=%d W=%d R=%r", instance.name,
                  spec.seed, instance.m, capacity, rent)
    return instance


def corpus(grid, seed=0):
    """GeneratorSpecs of an experiment grid.

    small-range: uncorr, uncorr-s-w and b-s-corr items on 101 cities
    with 1, 5 or 10 items per city and capacity classes 1, 6 and 10,
    values in [1, 10**3], round-robin.

    large-range: uncorr, uncorr-s-w and m-s-corr with the same sizes
    and classes, values in [1, 10**7], profit-sorted with k equal to
    the items per city.
    """
    if grid == "small-range":
        families = ("uncorr", "uncorr-s-w", "b-s-corr")
        value_range, assignment = SMALL_RANGE, ROUND_ROBIN
    elif grid == "large-range":
        families = ("uncorr", "uncorr-s-w", "m-s-corr")
        value_range, assignment = LARGE_RANGE, PROFIT_SORTED
    else:
        raise ValueError(f"unknown grid {grid!r}")

    specs = []
    for family in families:
        for per_city in (1, 5, 10):
            for capacity_class in (1, 6, 10):
                spec = GeneratorSpec(family=family,
                                     m=100 * per_city,
                                     value_range=value_range,
                                     capacity_class=capacity_class,
                                     assignment=assignment,
                                     per_city=per_city,
                                     cities=101,
                                     seed=seed + len(specs))
                specs.append(spec)

    return specs


def _knapsack(rng, spec):
    low, high = spec.value_range
    span = high - low
    size = spec.m
    if spec.family == "uncorrelated-similar-weights":
        light = low + int(np.ceil(0.9 * span))
        weights = rng.integers(light, high, size=size, endpoint=True)
    else:
        weights = rng.integers(low, high, size=size, endpoint=True)

    offset = max(1, span // 10)
    if spec.family in ("uncorrelated", "uncorrelated-similar-weights"):
        profits = rng.integers(low, high, size=size, endpoint=True)
    elif spec.family == "bounded-strongly-correlated":
        profits = np.minimum(weights + offset, high)
    else:
        offsets = rng.choice(np.array([1, 2, 3]) * offset, size=size)
        profits = np.minimum(weights + offsets, high)

    return weights.tolist(), profits.tolist()


def _tour(rng, cities):
    side = max(100, 10 * int(np.ceil(np.sqrt(cities))))
    cells = rng.choice(side * side, size=cities, replace=False)
    xs, ys = cells // side, cells % side
    following = np.roll(np.arange(cities), -1)
    dists = np.ceil(np.hypot(xs[following] - xs, ys[following] - ys))
    return tuple(float(dist) for dist in dists)


def _assign(spec, profits):
    slots = spec.cities - 1
    if spec.assignment == ROUND_ROBIN:
        return [2 + idx % slots for idx in range(spec.m)]

    if spec.m > slots * spec.per_city:
        raise ValueError(
            f"{spec.m} items do not fit {slots} cities with "
            f"{spec.per_city} items each")

    order = sorted(range(spec.m), key=lambda idx: -profits[idx])
    cities = [0] * spec.m
    for rank, idx in enumerate(order):
        cities[idx] = 2 + rank // spec.per_city

    return cities


def _rent(profits, weights, capacity, distances):
    """Half the profit a full knapsack is worth per unit of the extra
    time it takes to carry it over the whole route.
    """
    if not profits:
        return 1.0

    full_profit = sum(profits) * capacity / sum(weights)
    extra_time = sum(distances) * (1 / V_MIN - 1 / V_MAX)
    return 0.5 * full_profit / extra_time


_logger = logging.getLogger("pwt.generate")
