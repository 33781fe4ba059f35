"""Python bindings for the pie dependently typed kernel."""

from ._core import (
    KernelError,
    alpha_eq,
    check_files,
    check_source,
    equal,
    normalize,
    pretty,
    type_of,
)

__all__ = [
    "KernelError",
    "alpha_eq",
    "check_files",
    "check_source",
    "equal",
    "normalize",
    "pretty",
    "type_of",
]
