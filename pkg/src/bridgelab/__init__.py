"""Exact small-scale enumeration for connectivity of bridge-addable graph classes."""

from bridgelab.errors import (
    BridgelabError,
    CapabilityError,
    InvalidArgument,
    InvalidCodeword,
    VerificationFailure,
)
from bridgelab.graphcore import Graph, add_edge, bridges, components, frag

__version__ = "0.1.0"

__all__ = [
    "BridgelabError",
    "CapabilityError",
    "Graph",
    "InvalidArgument",
    "InvalidCodeword",
    "VerificationFailure",
    "add_edge",
    "bridges",
    "components",
    "frag",
]
