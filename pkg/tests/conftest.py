from __future__ import annotations

import pytest

from palfact.enumeration import extension_m
from palfact.words import Word

# Table of the enumerated worst-case values K(1)..K(30).
K_TABLE = [1, 2, 2, 2, 2, 3, 3, 4, 4, 4, 5, 5, 5, 6, 6, 6, 6, 7, 7, 8, 8, 8, 8, 9, 9, 10, 10, 10, 10, 11]

# Exact averages rendered to the published precision: n -> (kbar, kbar/n).
KBAR_TABLE = {
    1: ("1.00", "1.0000"),
    2: ("1.50", "0.7500"),
    3: ("1.50", "0.5000"),
    4: ("1.75", "0.4375"),
    5: ("1.75", "0.3500"),
    6: ("2.06", "0.3438"),
    7: ("2.09", "0.2991"),
    8: ("2.33", "0.2910"),
    9: ("2.46", "0.2734"),
    10: ("2.61", "0.2613"),
    11: ("2.75", "0.2502"),
    12: ("2.91", "0.2425"),
    13: ("3.05", "0.2349"),
    14: ("3.20", "0.2285"),
    15: ("3.36", "0.2239"),
    16: ("3.50", "0.2188"),
    17: ("3.66", "0.2152"),
    18: ("3.81", "0.2114"),
    19: ("3.96", "0.2084"),
    20: ("4.11", "0.2055"),
    21: ("4.26", "0.2030"),
}

EXCEPTIONAL_WORD = "aababbaabab"


@pytest.fixture(scope="session")
def m_tables_14():
    """m for every word of every length 1..14, as uint8 layers."""
    return extension_m(Word.empty(), 14)
