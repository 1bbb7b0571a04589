from dataclasses import replace
import os

import pytest

from pwt import dp
from pwt import generate
from pwt import hardness
from pwt import instio
from pwt import model

DATA = os.path.join(os.path.dirname(__file__), "data")


def _data(name):
    return os.path.join(DATA, name)


def _text(name):
    with open(_data(name), encoding="utf8") as file:
        return file.read()


def test_read_ttp():
    inst = instio.read_instance(_data("tiny.ttp"))
    assert inst.name == "tiny"
    assert inst.n == 3
    assert inst.distances == (5.0, 1.0, 4.0)
    assert [(item.index, item.city) for item in inst.items] == [
        (1, 2), (3, 2), (2, 3)]
    assert [(item.profit, item.weight) for item in inst.items] == [
        (10, 2), (4, 3), (7, 1)]
    assert inst.capacity == 4
    assert (inst.v_min, inst.v_max, inst.rent) == (0.1, 1.0, 0.5)


def test_read_ttp_closed():
    inst = instio.read_instance(_data("tiny.ttp"), closed=True)
    assert inst.n == 4
    assert inst.distances == (5.0, 1.0, 4.0, 10.0)


def test_read_ttp_route():
    route = instio.read_route(_data("tiny.route"))
    assert route == [3, 1, 2, 4]
    inst = instio.read_instance(_data("tiny.ttp"), route=route)
    assert inst.distances == (6.0, 5.0, 5.0)
    assert [(item.index, item.city) for item in inst.items] == [
        (2, 1), (1, 3), (3, 3)]

    with pytest.raises(model.ParseError, match="permutation"):
        instio.parse_instance(_text("tiny.ttp"), route=[1, 2, 3])


def test_item_on_last_node():
    text = _text("tiny.ttp").replace("2\t7\t1\t3", "2\t7\t1\t4")
    with pytest.raises(model.ParseError, match="closed") as info:
        instio.parse_instance(text)
    assert info.value.lineno == 17

    inst = instio.parse_instance(text, closed=True)
    assert inst.items[-1].city == 4


def test_ttp_errors():
    text = _text("tiny.ttp")
    with pytest.raises(model.ParseError, match="EDGE_WEIGHT_TYPE"):
        instio.parse_instance(text.replace("CEIL_2D", "GEO"))
    with pytest.raises(model.ParseError, match="RENTING RATIO"):
        instio.parse_instance(text.replace("RENTING RATIO", "RENT"))
    with pytest.raises(model.ParseError, match="coordinates"):
        instio.parse_instance(text.replace("4\t5\t8\n", ""))
    with pytest.raises(model.ParseError, match="unknown node"):
        instio.parse_instance(text.replace("3\t4\t3\t2", "3\t4\t3\t9"))
    with pytest.raises(model.ParseError) as info:
        instio.parse_instance(text.replace("3\t4\t3\t2", "3\t4\t2.5\t2"))
    assert info.value.lineno == 18
    with pytest.raises(model.ParseError, match="capacity"):
        instio.parse_instance(text.replace("KNAPSACK: \t4",
                                           "KNAPSACK: \t0"))
    with pytest.raises(model.ParseError, match="NUMBER OF ITEMS"):
        instio.parse_instance(text.replace("ITEMS: \t3", "ITEMS: \t2"))


def test_read_native(e2):
    inst = instio.read_instance(_data("e2.pwt"))
    assert inst == e2
    assert inst.name == "E2"
    assert [item.index for item in inst.items] == [1, 2]


def test_write_native(e2):
    assert instio.write_instance(e2) == _text("e2.pwt")
    inst = instio.read_instance(_data("e2.pwt"))
    assert instio.write_instance(inst) == _text("e2.pwt")


def test_native_errors():
    text = _text("e2.pwt")
    with pytest.raises(model.ParseError, match="capacity") as info:
        instio.parse_instance(text.replace("KNAPSACK: 3", "KNAPSACK: 0"))
    assert info.value.lineno == 4
    with pytest.raises(model.ParseError, match="distances"):
        instio.parse_instance(text.replace("DIMENSION: 3", "DIMENSION: 4"))
    with pytest.raises(model.ParseError, match="weight") as info:
        instio.parse_instance(text.replace("1 2 1 1", "1 2 x 1"))
    assert info.value.lineno == 12
    with pytest.raises(model.ParseError, match="never carried"):
        instio.parse_instance(text.replace("2 3 2 2", "3 3 2 2"))
    with pytest.raises(model.ParseError, match="v_min"):
        instio.parse_instance(text.replace("MIN SPEED: 1", "MIN SPEED: 3"))
    with pytest.raises(model.ParseError, match="header"):
        instio.parse_instance("PROBLEM NAME E2\n" + text)


def test_native_rejects_route():
    with pytest.raises(ValueError, match="route"):
        instio.parse_instance(_text("e2.pwt"), route=[1, 2, 3])


def test_native_no_items():
    text = ("DIMENSION: 2\n"
            "NUMBER OF ITEMS: 0\n"
            "CAPACITY OF KNAPSACK: 5\n"
            "MIN SPEED: 0.5\n"
            "MAX SPEED: 1\n"
            "RENTING RATIO: 2\n"
            "DISTANCES\n"
            "3\n"
            "ITEMS\n"
            "EOF\n")
    inst = instio.parse_instance(text)
    assert inst.m == 0
    solution = dp.dp_solve(inst)
    assert solution.evaluation.benefit == model.baseline_benefit(inst)
    assert solution.evaluation.benefit == -6.0


def test_name_from_file(tmp_path, e2):
    path = tmp_path / "unnamed.pwt"
    instio.write_file(path, replace(e2, name=""))
    inst = instio.read_instance(path)
    assert inst.name == "unnamed"
    assert inst == e2


def test_generated_round_trip():
    families = list(generate.FAMILIES)
    for seed in range(50):
        spec = generate.GeneratorSpec(family=families[seed % 4],
                                      m=30,
                                      value_range=(1, 10**5),
                                      capacity_class=1 + seed % 10,
                                      cities=16,
                                      seed=seed)
        inst = generate.generate(spec)
        copy = instio.parse_instance(instio.write_instance(inst))
        assert copy == inst
        assert copy.name == inst.name
        assert copy.rent == inst.rent


def test_reduction_round_trip():
    for values, target in (((3, 5, 8), 8), ((2, 3), 4), ((7,), 7),
                           ((4, 9, 13, 21), 20)):
        ssp = hardness.SspInstance(values, target)
        for kind in (hardness.CAPACITATED, hardness.UNCONSTRAINED):
            inst = hardness.reduce(kind, ssp)
            copy = instio.parse_instance(instio.write_instance(inst))
            assert copy == inst
            assert copy.v_min == inst.v_min
            assert copy.nu == inst.nu


def test_read_route_errors(tmp_path):
    path = tmp_path / "bad.route"
    path.write_text("1 2 x\n")
    with pytest.raises(model.ParseError):
        instio.read_route(path)
