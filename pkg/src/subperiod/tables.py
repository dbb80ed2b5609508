"""The four reference period tables, as published, in ``PREFIX(BLOCK)`` form.

Tables 1-3 are pure-periodic families; table 4 lists sets whose period only
starts after a preperiod. Published layouts in table 4 show a longer prefix
than the minimal one, and the first two rows append an extra copy of the
block after the parentheses.
"""
from __future__ import annotations

from dataclasses import dataclass

from .game import SubtractionSet


@dataclass(frozen=True)
class PublishedRow:
    set: SubtractionSet
    notation: str
    period: int


def _rows(*items):
    return tuple(PublishedRow(SubtractionSet(s), n, p) for s, n, p in items)


TABLES: dict[int, tuple[PublishedRow, ...]] = {
    1: _rows(
        ((1, 2, 3), "(0111)", 4),
        ((1, 2, 4), "(011)", 3),
        ((1, 2, 5), "(011)", 3),
        ((1, 2, 6), "(0110111)", 7),
        ((1, 2, 7), "(011)", 3),
        ((1, 2, 8), "(011)", 3),
        ((1, 2, 9), "(0110110111)", 10),
        ((1, 2, 10), "(011)", 3),
        ((1, 2, 11), "(011)", 3),
        ((1, 2, 12), "(0110110110111)", 13),
        ((1, 2, 13), "(011)", 3),
        ((1, 2, 14), "(011)", 3),
        ((1, 2, 15), "(0110110110110111)", 16),
    ),
    2: _rows(
        ((1, 3, 4), "(0101111)", 7),
        ((1, 3, 5), "(01)", 2),
        ((1, 3, 6), "(010101111)", 9),
        ((1, 3, 7), "(01)", 2),
        ((1, 3, 8), "(01010101111)", 11),
        ((1, 3, 9), "(01)", 2),
        ((1, 3, 10), "(0101010101111)", 13),
        ((1, 3, 11), "(01)", 2),
        ((1, 3, 12), "(010101010101111)", 15),
        ((1, 3, 13), "(01)", 2),
        ((1, 3, 14), "(01010101010101111)", 17),
        ((1, 3, 15), "(01)", 2),
        ((1, 3, 16), "(0101010101010101111)", 19),
        ((1, 3, 17), "(01)", 2),
        ((1, 3, 18), "(010101010101010101111)", 21),
    ),
    3: _rows(
        ((1, 2, 3), "(0111)", 4),
        ((1, 3, 4), "(0101111)", 7),
        ((1, 4, 5), "(01011111)", 8),
        ((1, 5, 6), "(01010111111)", 11),
        ((1, 6, 7), "(010101111111)", 12),
        ((1, 7, 8), "(010101011111111)", 15),
        ((1, 8, 9), "(0101010111111111)", 16),
        ((1, 9, 10), "(0101010101111111111)", 19),
        ((1, 10, 11), "(01010101011111111111)", 20),
        ((1, 11, 12), "(01010101010111111111111)", 23),
        ((1, 12, 13), "(010101010101111111111111)", 24),
        ((1, 13, 14), "(010101010101011111111111111)", 27),
        ((1, 14, 15), "(0101010101010111111111111111)", 28),
    ),
    4: _rows(
        ((1, 4, 10), "010110101111101101(01101101101)", 11),
        ((1, 4, 15), "010110101101011111011(0101101011011011)", 16),
        ((1, 4, 20), "0101101011010110101111101101(011010110101101101101)", 21),
        ((1, 6, 9), "010101101111(01011)01011", 5),
        ((1, 6, 14), "010101101010111111101101010110101101111(01011)01011", 5),
        ((1, 6, 16), "01010110101011011110101101(01011)01011", 5),
    ),
}

TABLE_TITLES = {
    1: "S = {1,2,k}, k = 3..15",
    2: "S = {1,3,k}, k = 4..18",
    3: "S = {1,k,k+1}, k = 2..14",
    4: "late-periodic special cases",
}


def table_sets(table_id: int) -> list[SubtractionSet]:
    try:
        return [row.set for row in TABLES[table_id]]
    except KeyError:
        raise ValueError(f"table id must be one of 1-4, got {table_id}") from None
