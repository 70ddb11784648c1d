"""Degree-preserving operations and constructive transformations."""

from .records import (
    BidirTwoSwitch,
    DeltaBigraph,
    DeltaDigraph,
    Gamma,
    LambdaBigraph,
    LambdaDigraph,
    OpRecord,
    Sigma,
    TwoSwitch,
    applicable_ops,
    apply_bidirected_two_switch,
    apply_delta_bigraph,
    apply_delta_digraph,
    apply_gamma,
    apply_lambda_bigraph,
    apply_lambda_digraph,
    apply_sigma,
    apply_two_switch,
    default_opset,
)
from .script import (
    OpScript,
    dumps_script,
    invert,
    loads_script,
    replay,
    replay_states,
    script_from_json,
    script_to_json,
)
from .transform import (
    add_bidirected_cycle,
    add_bidirected_path,
    decompose_complement,
    densify,
    gamma_transform,
    reduce_to_havel_hakimi,
    transform,
    transform_bigraph,
    transform_digraph,
    transform_graph,
)
