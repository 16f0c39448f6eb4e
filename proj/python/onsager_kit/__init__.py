"""Generalized Onsager algebras with exact arithmetic."""

from ._core import (
    CartanMatrix,
    OnsagerError,
    Realization,
    coeff_row,
    coeff_table,
    even_column_set,
    presets,
    serre_relation,
    serre_relation_text,
    set_thread_count,
    thread_count,
)


def preset(name):
    return CartanMatrix.preset(name)


def realize(name_or_matrix):
    """Realization for a preset name, a CartanMatrix or a list of rows."""
    if isinstance(name_or_matrix, str):
        c = CartanMatrix.preset(name_or_matrix)
    elif isinstance(name_or_matrix, CartanMatrix):
        c = name_or_matrix
    else:
        c = CartanMatrix(name_or_matrix)
    return Realization(c)


__all__ = [
    "CartanMatrix",
    "OnsagerError",
    "Realization",
    "coeff_row",
    "coeff_table",
    "even_column_set",
    "preset",
    "presets",
    "realize",
    "serre_relation",
    "serre_relation_text",
    "set_thread_count",
    "thread_count",
]
