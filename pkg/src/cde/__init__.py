"""Exact-arithmetic engine for down-degree expectations on finite posets,
tableau enumeration, and 0-Hecke word counting, with a verification lab for
the theorems and conjectures the code implements."""

from . import core, errors, permutations, poset, tableaux, verify  # noqa: F401

__all__ = ["core", "errors", "permutations", "poset", "tableaux", "verify"]
__version__ = "0.1.0"
