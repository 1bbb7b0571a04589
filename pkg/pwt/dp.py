"""Exact dynamic program for Packing While Traveling.

Items are processed in route order. After an item, the column holds
for each reachable total weight k the best benefit of any subset of
the items seen so far that weighs exactly k. Carrying weight k from
city i to the end costs R * d_in * t(k), independent of which items
make up k, so packing item e at city i onto a state of weight k
changes the benefit by

    p_e - R * d_in * (t(k + w_e) - t(k))

where d_in is the distance from city i to the last city.

Columns are sparse: a weight is only stored while no lighter weight
has at least the same benefit. Every column is therefore strictly
increasing in weight and in benefit, and its last entry is the best.

Ties: of optimal selections the lightest is returned, and of equal
weights the one that leaves the later item out, since the skip branch
is merged ahead of the take branch. model.brute_force instead returns
the lexicographically smallest vector, so the two may pick different
items of equal benefit.

Usage:
    from pwt import dp
    selection, evaluation = dp.dp_solve(instance)

SPDX-License-Identifier: Apache-2.0
"""

from dataclasses import dataclass, field
import heapq
import logging
import math
import time

import numpy as np

from . import model


class ParetoEntry:
    """One stored state of a column.

    parent is the entry this one was extended from and item the
    position of the item that was packed to get here. Entries carried
    over by not packing an item are shared between columns, so the
    parent chain lists exactly the packed items.
    """

    __slots__ = ("weight", "benefit", "parent", "item")

    def __init__(self, weight, benefit, parent=None, item=None):
        self.weight = weight
        self.benefit = benefit
        self.parent = parent
        self.item = item

    def __iter__(self):
        yield self.weight
        yield self.benefit

    def __repr__(self):
        return f"ParetoEntry({self.weight!r}, {self.benefit!r})"

    def positions(self):
        """Item positions packed on the way to this entry."""
        positions = []
        entry = self
        while entry is not None:
            if entry.item is not None:
                positions.append(entry.item)

            entry = entry.parent

        positions.reverse()
        return positions


class ParetoColumn:
    """Dominance-pruned entries sorted by strictly increasing weight.
    """

    def __init__(self, entries=()):
        self.entries = list(entries)

    @classmethod
    def root(cls, value):
        """Column of the empty prefix: weight 0 with value."""
        return cls([ParetoEntry(0, value)])

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, idx):
        return self.entries[idx]

    def pairs(self):
        """List of (weight, benefit) tuples."""
        return [tuple(entry) for entry in self.entries]

    def best(self):
        return self.entries[-1]


@dataclass(frozen=True)
class Solution:
    """Result of a solver run.

    sizes[i] is the column size after the first i items (sizes[0] is
    the starting column). value is the solver's own optimum: B for
    the exact program, B' for the approximation scheme. column is
    the final column.
    Unpacks to (selection, evaluation).
    """

    selection: model.Selection
    evaluation: model.Evaluation
    sizes: tuple = ()
    algo: str = "dp"
    value: float = None
    column: ParetoColumn = field(default=None, repr=False,
                                 compare=False)

    def __iter__(self):
        yield self.selection
        yield self.evaluation

    @property
    def peak(self):
        """Largest column size, None if no columns were built."""
        return max(self.sizes) if self.sizes else None


def prune_dominated(entries, key=None, dominated=None):
    """Drop every entry that a lighter one matches or beats.

    entries must be sorted by weight; each is a ParetoEntry or a
    (weight, benefit) pair. Of equal weights the larger benefit is
    kept, the earlier one on a tie. key maps a benefit to the value
    compared for dominance (identity by default). dominated, when
    given, replaces that test: dominated(entry, kept) is true when an
    entry of kept, all lighter than entry, dominates it.
    """
    if dominated is None:
        dominated = _key_rule(key or _identity)

    kept = []
    for entry in entries:
        if not isinstance(entry, ParetoEntry):
            entry = ParetoEntry(*entry)

        if kept and kept[-1].weight == entry.weight:
            if entry.benefit <= kept[-1].benefit:
                continue

            kept.pop()

        if kept and dominated(entry, kept):
            continue

        kept.append(entry)

    return ParetoColumn(kept)


def extend_column(column, item, d_in, instance, *,
                  key=None, dominated=None, pos=None, link=True):
    """Next column after deciding on item.

    The result merges the column itself (item not packed) with every
    entry shifted by the item (packed), dropping shifted weights above
    the capacity, and prunes dominated entries with key or
    dominated (see prune_dominated). pos is the item position
    recorded for reconstruction; link=False records nothing.
    """
    if pos is None and link:
        pos = instance.items.index(item)

    weight = item.weight
    profit = item.profit
    capacity = instance.capacity
    coef = instance.rent * d_in
    unit_time = instance.unit_time

    shifted = []
    for entry in column.entries:
        heavier = entry.weight + weight
        if heavier > capacity:
            break

        value = entry.benefit + profit - coef * (
            unit_time(heavier) - unit_time(entry.weight))
        if link:
            shifted.append(ParetoEntry(heavier, value, entry, pos))
        else:
            shifted.append(ParetoEntry(heavier, value))

    merged = heapq.merge(column.entries, shifted,
                         key=lambda entry: entry.weight)
    return prune_dominated(merged, key=key, dominated=dominated)


def run_columns(instance, start, *, key=None, dominated=None,
                link=True, keep=None):
    """Run all items through extend_column starting from the value
    start at weight 0. keep, when given, filters the entries of each
    new column. Returns (final column, column sizes).
    """
    column = ParetoColumn.root(start)
    sizes = [len(column)]
    suffix = instance.suffix
    for pos, item in enumerate(instance.items):
        if instance.selectable(item):
            column = extend_column(column, item, suffix[item.city - 1],
                                   instance, key=key,
                                   dominated=dominated, pos=pos,
                                   link=link)
            if keep is not None:
                column = ParetoColumn(filter(keep, column))

        sizes.append(len(column))

    return column, tuple(sizes)


def dp_solve(instance, reconstruct=True):
    """Optimal selection for B.

    Returns a Solution that unpacks to (Selection, Evaluation). With
    reconstruct=False no backpointers are kept: the selection is None
    and the evaluation only carries the benefit and the gain.
    """
    started = time.perf_counter()
    base = model.baseline_benefit(instance)
    column, sizes = run_columns(instance, base, link=reconstruct)
    best = column.best()

    if reconstruct:
        selection = model.Selection.from_positions(instance,
                                                   best.positions())
        evaluation = model.benefit(instance, selection)
    else:
        selection = None
        evaluation = model.Evaluation(profit=math.nan,
                                      time=math.nan,
                                      benefit=best.benefit,
                                      gain=best.benefit - base)

    _logger.debug("dp %s: m=%d W=%d value=%r peak=%d in %.3fs",
                  instance.name, instance.m, instance.capacity,
                  best.benefit, max(sizes),
                  time.perf_counter() - started)
    return Solution(selection=selection,
                    evaluation=evaluation,
                    sizes=sizes,
                    algo="dp",
                    value=best.benefit,
                    column=column)


def dense_solve(instance, limit=10**6):
    """Optimal value of B from a full table of W+1 weights per column.

    Unreachable weights hold -inf. Used to check the sparse program;
    capacities above limit are refused.
    """
    capacity = instance.capacity
    if capacity > limit:
        raise ValueError(
            f"capacity {capacity} above dense limit {limit}")

    unit = 1.0 / (instance.v_max
                  - instance.nu * np.arange(capacity + 1))
    beta = np.full(capacity + 1, -np.inf)
    beta[0] = model.baseline_benefit(instance)
    for item in instance.items:
        weight = item.weight
        if weight > capacity:
            continue

        coef = instance.rent * instance.suffix[item.city - 1]
        top = capacity + 1 - weight
        packed = beta[:top] + item.profit - coef * (unit[weight:]
                                                    - unit[:top])
        beta[weight:] = np.maximum(beta[weight:], packed)

    return float(beta.max())


def _identity(value):
    return value


def _key_rule(key):
    def dominated(entry, kept):
        return key(entry.benefit) <= key(kept[-1].benefit)

    return dominated


_logger = logging.getLogger("pwt.dp")
