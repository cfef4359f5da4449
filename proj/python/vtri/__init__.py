"""Virtual tribracket colorings of virtual knots and links."""

from ._core import (
    ParseError,
    ValidationError,
    VirtualTribracket,
    batch,
    count,
    count_alexander,
    enumerate,
    kernel_size,
    parse_tensor,
    read_tensor,
    verify,
    virtual_alexander,
)

__all__ = [
    "ParseError",
    "ValidationError",
    "VirtualTribracket",
    "batch",
    "count",
    "count_alexander",
    "enumerate",
    "kernel_size",
    "parse_tensor",
    "read_tensor",
    "verify",
    "virtual_alexander",
]
