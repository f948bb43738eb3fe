"""Supercharacter theories of finite groups from exact character tables."""

import json
from fractions import Fraction

from ._core import (
    ArgumentError,
    CharacterTable,
    InvalidTable,
    IoError,
    ParseError,
    SizeError,
    SupcharError,
    bad_part_count,
    bell_number,
    count_supertheories,
    cyclic_table,
    dihedral_table,
    frobenius_table,
    load_table,
    load_table_file,
    validate_table,
)
from . import _core


def find_supertheories(table, mode="main", threads=1):
    """Result document as a dict: group, n, root_order, mode, stats, theories."""
    return json.loads(_core._find_supertheories_json(table, mode, threads))


def alpha(table):
    """Exact fraction of nonempty subsets of {2..n} that are bad parts."""
    num, den = _core._alpha(table)
    return Fraction(num, den)


def verify(table, result):
    """Re-check every theory of a result document against the table."""
    return _core._verify_json(table, json.dumps(result))


__all__ = [
    "ArgumentError",
    "CharacterTable",
    "InvalidTable",
    "IoError",
    "ParseError",
    "SizeError",
    "SupcharError",
    "alpha",
    "bad_part_count",
    "bell_number",
    "count_supertheories",
    "cyclic_table",
    "dihedral_table",
    "find_supertheories",
    "frobenius_table",
    "load_table",
    "load_table_file",
    "validate_table",
    "verify",
]
