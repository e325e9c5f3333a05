"""Induced modules of the q-deformed general linear superalgebra gl(2/1)."""

from ._kacmod import (
    build_module,
    bundle_json,
    check_module,
    classify,
    full_module_basis,
    limit_compare,
    qbracket,
    qbracket_sqrt,
)

__all__ = [
    "build_module",
    "bundle_json",
    "check_module",
    "classify",
    "full_module_basis",
    "limit_compare",
    "qbracket",
    "qbracket_sqrt",
]
