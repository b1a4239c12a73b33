"""Randomness tests for circular time series built on random circular-arc graphs."""

from ._rcag import (
    InvalidInput,
    MissingThreshold,
    ParseError,
    VersionError,
    arcs_intersect,
    build_graph,
    calibrate,
    dd_statistic,
    dd_test,
    degree_cdf,
    degree_pmf,
    ep_test,
    generate,
    power,
    validate_theory,
)

__all__ = [
    "InvalidInput",
    "MissingThreshold",
    "ParseError",
    "VersionError",
    "arcs_intersect",
    "build_graph",
    "calibrate",
    "dd_statistic",
    "dd_test",
    "degree_cdf",
    "degree_pmf",
    "ep_test",
    "generate",
    "power",
    "validate_theory",
]
