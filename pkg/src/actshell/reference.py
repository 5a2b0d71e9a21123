"""The five-element graphic matroid used as the worked reference example.

Ground set 1..5 with the natural order; the bases are all 3-subsets except
123 and 145. It is the cycle matroid of the graph on vertices a, b, c, d with
edges 1 = ab, 2 = ac, 3 = bc, 4 = ad, 5 = bd.
"""

from __future__ import annotations

import itertools

from .matroid import OrderedMatroid, from_bases, from_graph

GRAPH_EDGES = [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)]


def reference_matroid() -> OrderedMatroid:
    excluded = {(1, 2, 3), (1, 4, 5)}
    bases = [c for c in itertools.combinations(range(1, 6), 3) if c not in excluded]
    return from_bases(5, bases)


def reference_graph_matroid() -> OrderedMatroid:
    return from_graph(4, GRAPH_EDGES)


# basis: (EP, EA, IP, IA). EP(125) is 34 (45 would meet the basis); this also
# agrees with the facet F(125) below.
ACTIVITY_TABLE = {
    "124": ("35", "", "", "124"),
    "125": ("34", "", "5", "12"),
    "134": ("25", "", "3", "14"),
    "135": ("24", "", "35", "1"),
    "234": ("5", "1", "23", "4"),
    "235": ("4", "1", "235", ""),
    "245": ("3", "1", "45", "2"),
    "345": ("", "12", "345", ""),
}

# basis: (F(B), reduced facet, lex restriction set); barred vertices are negative.
FACET_TABLE = {
    "124": ([1, 2, 3, 4, 5, -1, -2, -4], [1, 2, -2, -4], []),
    "125": ([1, 2, 3, 4, 5, -1, -2, -5], [1, 2, -2, -5], [-5]),
    "134": ([1, 2, 3, 4, 5, -1, -3, -4], [1, 2, -3, -4], [-3]),
    "135": ([1, 2, 3, 4, 5, -1, -3, -5], [1, 2, -3, -5], [-3, -5]),
    "234": ([2, 3, 4, 5, -1, -2, -3, -4], [2, -2, -3, -4], [-2, -3]),
    "235": ([2, 3, 4, 5, -1, -2, -3, -5], [2, -2, -3, -5], [-2, -3, -5]),
    "245": ([2, 3, 4, 5, -1, -2, -4, -5], [2, -2, -4, -5], [-4, -5]),
    "345": ([3, 4, 5, -1, -2, -3, -4, -5], [-2, -3, -4, -5], [-3, -4, -5]),
}

TUTTE_TERMS = [(3, 0, 1), (2, 0, 2), (1, 0, 1), (1, 1, 2), (0, 1, 1), (0, 2, 1)]
H_VECTOR = [1, 2, 3, 2]
CONE_POINTS = [3, 4, 5, -1]

# A linear extension of the external order that starts 124, 135: not a shelling
# of either complex (the second facet meets the first in codimension 2).
EXT_ORDER_NONSHELLING = ["124", "135", "125", "134", "234", "235", "245", "345"]
# A linear extension of the internal order: shells IN but fails on Act at 345.
INT_ORDER_ACT_FAILURE = ["124", "125", "134", "135", "245", "345", "234", "235"]
INT_ORDER_FAILURE_INDEX = 5


def basis_of(word: str) -> int:
    m = 0
    for ch in word:
        m |= 1 << (int(ch) - 1)
    return m
