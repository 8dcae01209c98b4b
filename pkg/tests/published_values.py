"""
Frozen published values, transcribed once and compared against computed output.

PRINTED_GENERATORS holds the ten annihilator generators for shape (2,2) at
v = 1 exactly as published (cycle notation, left-to-right composition).
The tableaux are a = 1,2,3,4 (shape (4)) and b, c, d of shape (3,1).
"""

import re
from itertools import permutations

from heckeann.rings import RingSpec
from heckeann.symgroup import Permutation, length, parse_cycles

TABLEAUX = {"a": "1,2,3,4", "b": "1,2,3/4", "c": "1,2,4/3", "d": "1,3,4/2"}

PRINTED_GENERATORS = {
    "aa": None,  # printed as the signed sum over S_4
    "bb": "(1) - (12)-(13)-(23) + (123)+(132)",
    "bc": "(34)-(12)(34)-(143)-(243)+(1243)+(1432)",
    "bd": "(234)-(1342)-(1423)-(24)+(13)(24)+(142)",
    "cc": "(1)-(12)-(14)-(24)+(124) +(142)",
    "cb": "(34)-(12)(34)-(134)-(234)+(1234)+(1342)",
    "cd": "(23)-(132)-(14)(23)-(243)+(1324)+(1432)",
    "db": "(243)-(1243)-(1324) - (24) + (124) + (13)(24)",
    "dc": "(23) - (123) - (14)(23) - (234) + (1234) + (1423)",
    "dd": "(1) - (13) - (14) - (34) +(134) + (143)",
}

COUNTEREXAMPLE_R = "(23)+(1342)+(1243)+(14)"

F12_MATRIX = (
    (1, 1, 0, 1, 0, 0),
    (1, 0, 1, 0, 1, 0),
    (0, 1, 1, 0, 0, 1),
    (0, 0, 0, 1, 1, 1),
)

_TERM = re.compile(r"([+-]?)\s*((?:\(\d+\))+)")


def parse_group_sum(text: str, n: int = 4) -> dict[Permutation, int]:
    """Turn "(1) - (12) + (13)(24)" into {permutation: coefficient}."""
    out: dict[Permutation, int] = {}
    compact = text.replace(" ", "")
    consumed = "".join(m.group(0) for m in _TERM.finditer(compact))
    if consumed != compact:
        raise ValueError(f"unparsed text in {text!r}")
    for sign, cycles in _TERM.findall(compact):
        w = parse_cycles(cycles, n)
        out[w] = out.get(w, 0) + (-1 if sign == "-" else 1)
    return {w: c for w, c in out.items() if c}


def printed_generator(label: str) -> dict[Permutation, int]:
    if label == "aa":
        return {Permutation(p): (-1) ** length(p) for p in permutations(range(1, 5))}
    return parse_group_sum(PRINTED_GENERATORS[label])


def as_group_sum(elt) -> dict[Permutation, int]:
    """Integer coefficients of an element specialized at v = 1."""
    q1 = RingSpec.rationals(1)
    if elt.ring != q1:
        elt = elt.specialize(q1)
    return {w: int(c) for w, c in elt.items()}
