"""Packing While Traveling instances and objective.

A vehicle travels a fixed route of n+1 cities. Items sit in the first
n cities. Carrying weight k slows the vehicle from v_max down to
v_max - nu*k, where nu = (v_max - v_min)/W, and the vehicle is rented
at R per time unit. For a selection x of items:

    P(x) = total profit of the selected items
    T(x) = sum over legs i of d_i / (v_max - nu * weight after city i)
    B(x) = P(x) - R * T(x)          benefit
    B'(x) = B(x) - B(empty)         gain over travelling empty

Usage:
    from pwt import model
    inst = model.Instance(distances=(1.0, 1.0),
                          items=(model.Item(1, 2, 1),
                                 model.Item(2, 3, 2)),
                          v_min=1.0, v_max=2.0, capacity=3, rent=1.0)
    sel = model.Selection.from_positions(inst, (0, 1))
    model.benefit(inst, sel).benefit  # 3.4

Items are kept in route order (by city, stable within a city). Every
position used by the solvers refers to Instance.items in that order;
Item.index keeps the number the item had in its source.

Environment variables used:
    PWT_BRUTE_LIMIT

SPDX-License-Identifier: Apache-2.0
"""

from dataclasses import dataclass, field, replace
from functools import cached_property
import logging
import numbers

import numpy as np

from . import _util


@dataclass(frozen=True)
class Item:
    """One item: the city it sits in, its profit and its weight.

    index is the item number in the source (file, generator). When
    left as None the instance numbers items by their input position.
    """

    city: int
    profit: float
    weight: int
    index: int = None


@dataclass(frozen=True)
class Instance:
    """The complete input of a PWT problem.

    distances[i-1] is the distance from city i to city i+1, so the
    route has len(distances)+1 cities. items are re-ordered by city
    at construction. The instance is immutable and may be shared.
    """

    distances: tuple
    items: tuple
    v_min: float
    v_max: float
    capacity: int
    rent: float
    name: str = field(default="", compare=False)

    def __post_init__(self):
        distances = tuple(float(dist) for dist in self.distances)
        items = []
        for pos, item in enumerate(self.items):
            if item.index is None:
                item = replace(item, index=pos + 1)

            items.append(item)

        items.sort(key=lambda item: item.city)
        object.__setattr__(self, "distances", distances)
        object.__setattr__(self, "items", tuple(items))
        self.__validate()

    def __validate(self):
        if not self.distances:
            raise InstanceError("route needs at least two cities")

        for leg, dist in enumerate(self.distances, start=1):
            if not dist > 0:
                raise InstanceError(f"d_{leg}={dist} is not positive")

        if not 0 < self.v_min <= self.v_max:
            raise InstanceError(
                f"need 0 < v_min <= v_max, got {self.v_min}, "
                f"{self.v_max}")

        if not _is_int(self.capacity) or self.capacity < 1:
            raise InstanceError(
                f"capacity {self.capacity!r} is not >= 1")

        if not self.rent > 0:
            raise InstanceError(f"rent {self.rent} is not positive")

        for item in self.items:
            if not _is_int(item.city) or not 1 <= item.city <= self.n:
                raise InstanceError(
                    f"item {item.index}: city {item.city} "
                    f"not in 1-{self.n}")

            if not _is_int(item.weight) or item.weight < 1:
                raise InstanceError(
                    f"item {item.index}: weight {item.weight!r} is not "
                    "a positive integer")

            if not item.profit > 0:
                raise InstanceError(
                    f"item {item.index}: profit {item.profit} is not "
                    "positive")

    @property
    def n(self):
        """Number of cities that may hold items (route has n+1)."""
        return len(self.distances)

    @property
    def m(self):
        """Number of items."""
        return len(self.items)

    @cached_property
    def nu(self):
        """Speed lost per carried weight unit."""
        return (self.v_max - self.v_min) / self.capacity

    @cached_property
    def suffix(self):
        """suffix[i-1] is the distance from city i to the last city."""
        return suffix_distances(self)

    @property
    def total_distance(self):
        return self.suffix[0]

    def selectable(self, item):
        """False for items that can never fit."""
        return item.weight <= self.capacity

    def unit_time(self, weight):
        """Travel time per distance unit with weight on board.
        No range check; see unit_travel_time.
        """
        return 1.0 / (self.v_max - self.nu * weight)

    def with_rent(self, rent):
        return replace(self, rent=rent)


@dataclass(frozen=True)
class Selection:
    """Decision vector over Instance.items plus its total weight.

    Build it with from_bits or from_positions; evaluating a selection
    whose total_weight is not the weight of its bits is a ValueError.
    """

    bits: tuple
    total_weight: int

    @classmethod
    def empty(cls, instance):
        return cls((False,) * instance.m, 0)

    @classmethod
    def from_bits(cls, instance, bits):
        bits = tuple(bool(bit) for bit in bits)
        if len(bits) != instance.m:
            raise ValueError(f"{len(bits)} bits for an instance of "
                             f"{instance.m} items")

        total = sum(item.weight
                    for item, bit in zip(instance.items, bits) if bit)
        return cls(bits, total)

    @classmethod
    def from_positions(cls, instance, positions):
        """Selection of the items at the given Instance.items
        positions.
        """
        bits = [False] * instance.m
        for pos in positions:
            bits[pos] = True

        return cls.from_bits(instance, bits)

    @property
    def positions(self):
        return tuple(pos for pos, bit in enumerate(self.bits) if bit)

    def item_indices(self, instance):
        """Source numbers of the selected items, ascending."""
        return sorted(instance.items[pos].index
                      for pos in self.positions)

    def feasible(self, instance):
        return self.total_weight <= instance.capacity


@dataclass(frozen=True)
class Evaluation:
    """P(x), T(x), B(x) and B'(x) of one selection."""

    profit: float
    time: float
    benefit: float
    gain: float


def suffix_distances(instance):
    """Distance from each city i (1..n) to the last city."""
    suffix = [0.0] * instance.n
    total = 0.0
    for leg in range(instance.n - 1, -1, -1):
        total += instance.distances[leg]
        suffix[leg] = total

    return tuple(suffix)


def unit_travel_time(instance, weight):
    """t(w) = 1/(v_max - nu*w) for 0 <= w <= W."""
    if not 0 <= weight <= instance.capacity:
        raise ValueError(
            f"weight {weight} not in range 0-{instance.capacity}")

    return instance.unit_time(weight)


def travel_time(instance, selection):
    """T(x) for a feasible selection."""
    _check_feasible(instance, selection)
    load = [0] * (instance.n + 1)
    for item, bit in zip(instance.items, selection.bits):
        if bit:
            load[item.city] += item.weight

    carried = 0
    total = 0.0
    for city, dist in enumerate(instance.distances, start=1):
        carried += load[city]
        total += dist * instance.unit_time(carried)

    return total


def baseline_benefit(instance):
    """B(empty): the (negative) cost of travelling empty."""
    return -instance.rent * instance.total_distance / instance.v_max


def benefit(instance, selection):
    """Evaluate a feasible selection.
    """
    time = travel_time(instance, selection)
    profit = sum(item.profit
                 for item, bit in zip(instance.items, selection.bits)
                 if bit)
    value = profit - instance.rent * time
    return Evaluation(profit=profit,
                      time=time,
                      benefit=value,
                      gain=value - baseline_benefit(instance))


def brute_force(instance, limit=None):
    """Best selection by enumerating all 2**m decision vectors.

    Ties go to the lexicographically smallest vector. Returns
    (Selection, Evaluation). The number of items is limited to limit,
    by default PWT_BRUTE_LIMIT or 25.
    """
    if limit is None:
        limit = _util.env_int("PWT_BRUTE_LIMIT", 25)

    m = instance.m
    if m > limit:
        raise OracleLimitError(
            f"brute force limited to {limit} items, instance has {m}; "
            "use dp")

    if m == 0:
        empty = Selection.empty(instance)
        return empty, benefit(instance, empty)

    weights = np.array([item.weight for item in instance.items],
                       dtype=np.int64)
    profits = np.array([item.profit for item in instance.items],
                       dtype=float)
    cities = np.array([item.city for item in instance.items])
    dists = np.array(instance.distances)
    # carries[j, i] is the weight item j adds on leg i+1
    carries = np.where(cities[:, None] <= np.arange(1, instance.n + 1),
                       weights[:, None], 0)
    # item 0 is the most significant bit so mask order is lexicographic
    shifts = np.arange(m - 1, -1, -1, dtype=np.int64)

    best_mask, best_value = 0, -np.inf
    chunk = 1 << 16
    for start in range(0, 1 << m, chunk):
        masks = np.arange(start, min(start + chunk, 1 << m),
                          dtype=np.int64)
        bits = (masks[:, None] >> shifts) & 1
        feasible = bits @ weights <= instance.capacity
        carried = (bits @ carries)[feasible]
        time = (dists / (instance.v_max - instance.nu * carried)).sum(1)
        values = bits[feasible] @ profits - instance.rent * time
        if values.size == 0:
            continue

        pos = int(np.argmax(values))
        if values[pos] > best_value:
            best_value = values[pos]
            best_mask = int(masks[feasible][pos])

    bits = [(best_mask >> int(shift)) & 1 for shift in shifts]
    best = Selection.from_bits(instance, bits)
    _logger.debug("brute force %s: m=%d value=%r",
                  instance.name, m, best_value)
    return best, benefit(instance, best)


def _check_feasible(instance, selection):
    if len(selection.bits) != instance.m:
        raise ValueError("selection does not match the instance")

    total = sum(item.weight
                for item, bit in zip(instance.items, selection.bits)
                if bit)
    if total != selection.total_weight:
        raise ValueError(f"selection total_weight "
                         f"{selection.total_weight} is not the "
                         f"selected weight {total}")

    if not selection.feasible(instance):
        raise InfeasibleError(
            f"selected weight {selection.total_weight} exceeds "
            f"capacity {instance.capacity}")


def _is_int(value):
    return (isinstance(value, numbers.Integral)
            and not isinstance(value, bool))


class PwtError(Exception):
    """General pwt error.
    """


class InstanceError(PwtError):
    """An instance violates its invariants.
    """


class InfeasibleError(PwtError):
    """A selection weighs more than the capacity.
    """


class OracleLimitError(PwtError):
    """Too many items to enumerate.
    """


class ParseError(PwtError):
    """Malformed instance text.
    """

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"

        super().__init__(message)


_logger = logging.getLogger("pwt.model")
