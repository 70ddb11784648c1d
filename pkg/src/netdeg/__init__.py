"""Degree sequences and net-degree sequences of graphs, digraphs and bidirected graphs."""

from .characterize import (
    TightnessWitness,
    Violation,
    bigraphical_violation,
    digraphical_violation,
    graphical_violation,
    is_bigraphical,
    is_digraphical,
    is_graphical,
    is_realizable,
    is_tight_bidirected,
    is_tight_directed,
    is_tight_undirected,
    violation,
)
from .errors import (
    BoundExceeded,
    DomainRestricted,
    NetdegError,
    NotRealizable,
    NotWidth2Poset,
    PreconditionFailed,
)
from .graphs import (
    BIDIRECTED,
    DIRECTED,
    KINDS,
    UNDIRECTED,
    Bigraph,
    DegreeSequence,
    Digraph,
    ExtendedSequence,
    Graph,
    degree_sequence,
    extend,
    net_degree,
    net_degree_bigraph,
    net_degree_digraph,
    signed_degrees,
    underlying_graph,
)
from .realize import canonical_tournament, realize, realize_bigraph, realize_digraph, realize_graph

__version__ = "0.1.0"
