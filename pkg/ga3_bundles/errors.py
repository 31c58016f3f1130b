"""
Exception hierarchy.

Input problems (bad text, bad descriptors, violated preconditions) subclass ValueError
so callers can keep catching ValueError the usual way.
"""

from typing import Optional


class Ga3Error(Exception):
    """Base class for every error raised by ga3_bundles."""


# --- Polynomial text ---

class PolynomialSyntaxError(Ga3Error, ValueError):
    """Malformed polynomial text; `position` is the 0-based offset of the offending char."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UnknownVariableError(PolynomialSyntaxError):
    """A name outside the fixed variable set."""


class NegativeExponentError(PolynomialSyntaxError):
    """Exponent written with a minus sign."""


# --- Polynomial shape ---

class HeterogeneousPolynomialError(Ga3Error, ValueError):
    """Polynomial is not bihomogeneous for the relevant weight table."""


class ZeroPolynomialError(Ga3Error, ValueError):
    """The zero polynomial was given where a divisor equation is required."""


class ParameterInPolynomialError(Ga3Error, ValueError):
    """Action parameters appear where a parameter-free polynomial is required."""


# --- Descriptors ---

class DescriptorError(Ga3Error, ValueError):
    """Unparseable bundle, class or fibration descriptor."""


# --- Groebner engine ---

class GroebnerResourceError(Ga3Error):
    """The basis-size or degree cap was hit before the computation finished."""

    def __init__(self, message: str, basis_size: int = 0, degree: int = 0):
        self.basis_size = basis_size
        self.degree = degree
        super().__init__(message)


# --- Divisor classes ---

class DegenerateClassSystemError(Ga3Error, ValueError):
    """The two boundary classes are linearly dependent."""


class SuspiciousMultiplicityError(Ga3Error, ValueError):
    """Multiplicity along a link center exceeds a + b."""


# --- Automorphisms / actions ---

class BoundaryNormalizationError(Ga3Error, ValueError):
    """Boundary pair outside the shape handled by normalize_boundary."""


class BasePointError(Ga3Error, ValueError):
    """Base point is degenerate or outside the affine chart t1 != 0, x3 != 0."""


class InvalidAutomorphismError(Ga3Error, ValueError):
    """Images are not bihomogeneous of the right bidegree or do not invert."""


# --- Links ---

class MalformedLinkStepError(Ga3Error, ValueError):
    """LinkStep violates its kind/source/target/center invariants."""


class LinkContractError(Ga3Error):
    """A link map failed one of its construction-time contract checks."""


class LinkPreconditionError(Ga3Error):
    """The action does not preserve the link center; `witness` shows the motion."""

    def __init__(self, message: str, witness: Optional[str] = None):
        self.witness = witness
        super().__init__(message if witness is None else f"{message}: {witness}")


class SynthesisError(Ga3Error):
    """A step of the link fold failed."""

    def __init__(self, message: str, step_index: int, witness: Optional[str] = None):
        self.step_index = step_index
        self.witness = witness
        super().__init__(f"step {step_index}: {message}" + (f" ({witness})" if witness else ""))
