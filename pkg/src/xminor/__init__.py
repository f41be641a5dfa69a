"""Rooted graph minors: local connectivity of root sets, X-minors and lifting of spanning structures."""

from .connectivity import RootedGraph, kappa_x, min_x_separator
from .errors import ConstructionError, InvalidArgument, PreconditionError, ResourceLimit, XMinorError
from .graph import Graph, contract_edge, induced_subgraph
from .minors import Certificate, connected_x_minor, four_connected_x_minor, topological_x_minor, verify_certificate

__all__ = [
    "Certificate",
    "ConstructionError",
    "Graph",
    "InvalidArgument",
    "PreconditionError",
    "ResourceLimit",
    "RootedGraph",
    "XMinorError",
    "connected_x_minor",
    "contract_edge",
    "four_connected_x_minor",
    "induced_subgraph",
    "kappa_x",
    "min_x_separator",
    "topological_x_minor",
    "verify_certificate",
]
