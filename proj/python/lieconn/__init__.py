"""Graph-theoretic controllability checks for bilinear systems."""

from ._lieconn import (
    Algebra,
    DomainError,
    Error,
    LieVector,
    MismatchError,
    ParseError,
    SoundnessError,
    System,
    __version__,
    analyze,
    bracket,
    canonical_generators,
    check,
    closure_basis,
    closure_dimension,
    larc_oracle,
    parse_system,
    report_json,
)

__all__ = [
    "Algebra",
    "DomainError",
    "Error",
    "LieVector",
    "MismatchError",
    "ParseError",
    "SoundnessError",
    "System",
    "analyze",
    "bracket",
    "canonical_generators",
    "check",
    "closure_basis",
    "closure_dimension",
    "larc_oracle",
    "parse_system",
    "report_json",
]
