"""Error taxonomy shared by all modules.

Each error class carries the process exit code used by the command-line
driver, so library failures map onto stable, machine-readable categories:

  2  parse errors          (malformed scenario text)
  3  validation errors     (well-formed input violating a structural invariant)
  4  computation errors    (poles, degeneracies, unbounded geometry)
  5  cross-validation mismatches
"""

from __future__ import annotations


class EngineError(Exception):
    """Base class for all engine errors."""

    exit_code = 1


class UsageError(EngineError):
    """Caller combined values that do not belong together (e.g. mixed rings)."""

    exit_code = 3


class ParseError(EngineError):
    """Scenario text could not be parsed; message includes a location."""

    exit_code = 2


class ValidationError(EngineError):
    """Structural invariant violated by otherwise well-formed input."""

    exit_code = 3


class ComputationError(EngineError):
    """Exact computation cannot proceed (pole, degeneracy, unboundedness)."""

    exit_code = 4


class PoleError(ComputationError):
    """Evaluation at a root of a denominator."""


class DegenerateDatumError(ComputationError):
    """An equivariant Euler class with zero scalar part; the fixed-point
    datum violates the nondegeneracy hypothesis of the residue formula."""


class InconsistentResidueError(ComputationError):
    """A residue sum that should be polynomial has a genuine denominator."""


class GeometryError(ComputationError):
    """Unbounded, empty, or lower-dimensional polytope realization."""


class CrossValidationError(EngineError):
    """Localized and polytope-side values disagree at some sample."""

    exit_code = 5
