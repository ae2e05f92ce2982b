import pytest

from experiments.registry import REGISTRY_ORDER, get_instance


@pytest.fixture(scope="session")
def registry_instances():
    return {name: get_instance(name) for name in REGISTRY_ORDER}
