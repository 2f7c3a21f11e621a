"""Python bindings for the dpmatch degree-profile matcher."""

from ._dpmatch import (
    Graph,
    ParameterError,
    ParseError,
    accuracy,
    bernoulli_min_l1,
    default_L,
    distance,
    g_eval,
    match,
    run_experiment,
    sample_er_pair,
    sample_from_json,
)

__all__ = [
    "Graph",
    "ParameterError",
    "ParseError",
    "accuracy",
    "bernoulli_min_l1",
    "default_L",
    "distance",
    "g_eval",
    "match",
    "run_experiment",
    "sample_er_pair",
    "sample_from_json",
]
