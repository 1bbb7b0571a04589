import math

import pytest

from pwt import dp
from pwt import generate
from pwt import model


def test_prune_dominated():
    assert dp.prune_dominated([(0, -1), (2, 5), (3, 4)]).pairs() == [
        (0, -1), (2, 5)]
    assert dp.prune_dominated([(0, -1), (1, 0), (2, 3)]).pairs() == [
        (0, -1), (1, 0), (2, 3)]
    assert dp.prune_dominated([(1, 2), (1, 3)]).pairs() == [(1, 3)]
    assert dp.prune_dominated([(1, 3), (1, 2)]).pairs() == [(1, 3)]
    assert dp.prune_dominated([(0, 1), (1, 1)]).pairs() == [(0, 1)]
    assert dp.prune_dominated([]).pairs() == []


def test_prune_dominated_equal_weight_tie():
    first = dp.ParetoEntry(1, 2.0)
    second = dp.ParetoEntry(1, 2.0)
    column = dp.prune_dominated([first, second])
    assert column[0] is first


def test_prune_dominated_key():
    column = dp.prune_dominated([(0, 0.0), (1, 0.9), (2, 1.2)],
                                key=math.floor)
    assert column.pairs() == [(0, 0.0), (2, 1.2)]


def test_extend_column(e2):
    column = dp.ParetoColumn.root(-1.0)
    item = e2.items[0]
    column = dp.extend_column(column, item, e2.suffix[0], e2)
    assert len(column) == 2
    assert column[0].weight == 0
    assert column[0].benefit == -1.0
    assert column[1].weight == 1
    assert column[1].benefit == pytest.approx(0.8)
    sel = model.Selection.from_positions(e2, column[1].positions())
    assert model.benefit(e2, sel).benefit == pytest.approx(0.8)


def test_extend_column_useless_item():
    inst = model.Instance(distances=(10.0,),
                          items=(model.Item(1, 1, 5),),
                          v_min=0.1, v_max=1.0, capacity=10, rent=1.0)
    root = dp.ParetoColumn.root(model.baseline_benefit(inst))
    column = dp.extend_column(root, inst.items[0], 10.0, inst)
    assert column.pairs() == root.pairs()


def test_extend_column_capacity(e2):
    column = dp.ParetoColumn([dp.ParetoEntry(0, -1.0),
                              dp.ParetoEntry(2, 1.0)])
    column = dp.extend_column(column, e2.items[1], 1.0, e2, link=False)
    assert [entry.weight for entry in column] == [0, 2]


def test_prefix_columns_match_brute_force(random_instances):
    for inst in random_instances[:200]:
        if inst.m > 12:
            continue

        column = dp.ParetoColumn.root(model.baseline_benefit(inst))
        for pos, item in enumerate(inst.items):
            if inst.selectable(item):
                column = dp.extend_column(column, item,
                                          inst.suffix[item.city - 1],
                                          inst, pos=pos)

            prefix = _prefix(inst, pos + 1)
            _, ev = model.brute_force(prefix)
            best = column.best().benefit
            assert best == pytest.approx(ev.benefit, rel=1e-9, abs=1e-9)


def test_columns_strictly_increasing(random_instances):
    for inst in random_instances[:100]:
        column, sizes = dp.run_columns(inst,
                                       model.baseline_benefit(inst))
        weights = [entry.weight for entry in column]
        values = [entry.benefit for entry in column]
        assert weights == sorted(set(weights))
        assert values == sorted(set(values))
        assert weights[-1] <= inst.capacity
        assert len(sizes) == inst.m + 1
        assert sizes[0] == 1
        assert max(sizes) <= inst.capacity + 1
        for count, size in enumerate(sizes):
            assert size <= min(inst.capacity + 1, 2 ** count)


def test_columns_hold_best_subset_per_weight(random_instances):
    for inst in random_instances[:150]:
        if inst.m > 10:
            continue

        # weight and benefit of every subset, bit pos = item pos
        subsets = []
        for mask in range(1 << inst.m):
            sel = model.Selection.from_positions(
                inst, [pos for pos in range(inst.m) if mask >> pos & 1])
            if sel.feasible(inst):
                ev = model.benefit(inst, sel)
                subsets.append((mask, sel.total_weight, ev.benefit))

        column = dp.ParetoColumn.root(model.baseline_benefit(inst))
        for pos, item in enumerate(inst.items):
            if inst.selectable(item):
                column = dp.extend_column(column, item,
                                          inst.suffix[item.city - 1],
                                          inst, pos=pos)

            weights = [entry.weight for entry in column]
            values = [entry.benefit for entry in column]
            assert weights == sorted(set(weights))
            assert values == sorted(set(values))
            assert len(column) <= min(inst.capacity + 1, 2 ** (pos + 1))

            best = {}
            for mask, weight, value in subsets:
                if mask < 1 << (pos + 1):
                    best[weight] = max(best.get(weight, -math.inf),
                                       value)

            for entry in column:
                assert entry.benefit == pytest.approx(
                    best[entry.weight], rel=1e-9, abs=1e-9)

            # every prefix subset is matched by a stored lighter entry
            for weight, value in best.items():
                stored = max(entry.benefit for entry in column
                             if entry.weight <= weight)
                assert stored >= value - 1e-9


def test_ties_against_brute_force():
    inst = model.Instance(distances=(1.0,),
                          items=(model.Item(1, 5, 2), model.Item(1, 5, 2)),
                          v_min=1.0, v_max=2.0, capacity=3, rent=1.0)
    brute_sel, brute_ev = model.brute_force(inst)
    dp_sel, dp_ev = dp.dp_solve(inst)
    # brute force takes the smallest vector, dp keeps the earlier item
    assert brute_sel.bits == (False, True)
    assert dp_sel.bits == (True, False)
    assert dp_ev.benefit == brute_ev.benefit


def test_dp_prefers_lighter_ties():
    # constant speed: equal profits tie whatever they weigh
    inst = model.Instance(distances=(1.0,),
                          items=(model.Item(1, 5, 2), model.Item(1, 5, 1)),
                          v_min=2.0, v_max=2.0, capacity=2, rent=1.0)
    sel, _ = dp.dp_solve(inst)
    assert sel.bits == (False, True)
    assert sel.total_weight == 1


def test_dp_solve(e1, e2):
    solution = dp.dp_solve(e2)
    sel, ev = solution
    assert sel.item_indices(e2) == [1, 2]
    assert ev.benefit == pytest.approx(3.4)
    assert ev.gain == pytest.approx(4.4)
    assert solution.algo == "dp"
    assert solution.value == pytest.approx(3.4)
    assert solution.sizes[0] == 1
    assert solution.peak == max(solution.sizes)

    sel, ev = dp.dp_solve(e1)
    assert sel.positions == (0,)
    assert ev.benefit == pytest.approx(9.0)


def test_dp_solve_empty_optimum():
    inst = model.Instance(distances=(10.0,),
                          items=(model.Item(1, 1, 5), model.Item(1, 1, 5)),
                          v_min=0.1, v_max=1.0, capacity=10, rent=1.0)
    sel, ev = dp.dp_solve(inst)
    assert sel.positions == ()
    assert ev.benefit == model.baseline_benefit(inst)
    assert ev.gain == 0


def test_dp_solve_no_items():
    inst = model.Instance(distances=(1.0, 3.0), items=(), v_min=1.0,
                          v_max=2.0, capacity=5, rent=2.0)
    solution = dp.dp_solve(inst)
    assert solution.selection.bits == ()
    assert solution.evaluation.benefit == -4.0
    assert solution.sizes == (1,)


def test_dp_solve_unselectable_item():
    inst = model.Instance(distances=(1.0, 1.0),
                          items=(model.Item(1, 100, 4),
                                 model.Item(2, 3, 2)),
                          v_min=1.0, v_max=2.0, capacity=3, rent=1.0)
    solution = dp.dp_solve(inst)
    assert solution.selection.item_indices(inst) == [2]
    assert solution.sizes == (1, 1, 2)


def test_dp_solve_without_reconstruction(e2):
    solution = dp.dp_solve(e2, reconstruct=False)
    assert solution.selection is None
    assert math.isnan(solution.evaluation.profit)
    assert math.isnan(solution.evaluation.time)
    assert solution.evaluation.benefit == pytest.approx(3.4)
    assert solution.evaluation.gain == pytest.approx(4.4)


def test_dp_solve_matches_brute_force(random_instances):
    for inst in random_instances:
        solution = dp.dp_solve(inst)
        _, ev = model.brute_force(inst)
        assert solution.evaluation.benefit == pytest.approx(
            ev.benefit, rel=1e-9, abs=1e-9)
        # the reported selection evaluates to the program's value
        assert solution.value == pytest.approx(
            solution.evaluation.benefit, rel=1e-9, abs=1e-9)
        assert solution.selection.feasible(inst)


def test_dense_matches_sparse(random_instances):
    for inst in random_instances[:100]:
        assert inst.capacity <= 60
        sparse = dp.dp_solve(inst, reconstruct=False).value
        assert dp.dense_solve(inst) == pytest.approx(sparse, rel=1e-9,
                                                     abs=1e-9)


def test_dense_solve(e1, e2):
    assert dp.dense_solve(e2) == pytest.approx(3.4)
    assert dp.dense_solve(e1) == pytest.approx(9.0)
    with pytest.raises(ValueError):
        dp.dense_solve(e1, limit=9)


def test_dp_solve_generated():
    spec = generate.GeneratorSpec(family="b-s-corr", m=60, cities=21,
                                  value_range=(1, 100), capacity_class=3,
                                  seed=11)
    inst = generate.generate(spec)
    solution = dp.dp_solve(inst)
    assert solution.evaluation.benefit == pytest.approx(
        dp.dense_solve(inst), rel=1e-9)
    assert solution.evaluation.gain >= 0


def _prefix(inst, count):
    return model.Instance(distances=inst.distances,
                          items=inst.items[:count],
                          v_min=inst.v_min,
                          v_max=inst.v_max,
                          capacity=inst.capacity,
                          rent=inst.rent)
