"""Exact Iwahori-Hecke algebra computations: Murphy bases, permutation modules, annihilators."""

__version__ = "0.1.0"
