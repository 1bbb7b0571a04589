import numpy as np
import pytest

from pwt import generate
from pwt import model


@pytest.fixture
def e1():
    return model.Instance(distances=(1.0,),
                          items=(model.Item(city=1, profit=10, weight=10),),
                          v_min=1.0, v_max=2.0, capacity=10, rent=1.0,
                          name="E1")


@pytest.fixture
def e2():
    return model.Instance(distances=(1.0, 1.0),
                          items=(model.Item(city=1, profit=2, weight=1),
                                 model.Item(city=2, profit=3, weight=2)),
                          v_min=1.0, v_max=2.0, capacity=3, rent=1.0,
                          name="E2")


@pytest.fixture(scope="session")
def random_instances():
    """500 small generated instances: m <= 15, W <= 40, every family.
    """
    rng = np.random.default_rng(2024)
    families = list(generate.FAMILIES)
    instances = []
    for seed in range(500):
        spec = generate.GeneratorSpec(
            family=families[seed % len(families)],
            m=int(rng.integers(0, 16)),
            value_range=(1, 8),
            capacity_class=int(rng.integers(1, 4)),
            cities=int(rng.integers(2, 7)),
            seed=seed,
            name=f"random{seed}")
        instances.append(generate.generate(spec))

    return instances
