import doctest
import importlib

import pytest

MODULES = ["rings", "combinat", "symgroup", "linalg", "hecke", "modrep", "schurweyl", "verify", "cli"]


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    module = importlib.import_module(f"heckeann.{name}")
    result = doctest.testmod(module, optionflags=doctest.ELLIPSIS | doctest.NORMALIZE_WHITESPACE)
    assert result.failed == 0
