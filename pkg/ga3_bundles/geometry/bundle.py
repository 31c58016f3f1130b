"""
The split P^2-bundle F(-d1,-d2,0) over P^1 in Cox coordinates (t1,t2; x1,x2,x3).

The bundle is the (Gm)^2-quotient of (A^2 - 0) x (A^3 - 0) with weights
t1,t2 -> (1,0), x1 -> (d1,1), x2 -> (d2,1), x3 -> (0,1). Pic is Z*xi + Z*F; a
bihomogeneous polynomial of bidegree (lambda, mu) cuts a divisor of class mu*xi + lambda*F.
"""

import itertools
import re
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ga3_bundles.algebra.polynomial import (
    Bidegree,
    DegreeSentinel,
    Monomial,
    Polynomial,
    bidegree_of,
)
from ga3_bundles.errors import (
    DescriptorError,
    HeterogeneousPolynomialError,
    ZeroPolynomialError,
)


class BundleType(BaseModel):
    """(d1, d2) identifying F(-d1,-d2,0), normalized so that d1 >= d2 >= 0."""

    model_config = ConfigDict(frozen=True)

    d1: int
    d2: int

    @model_validator(mode="after")
    def _check_normalized(self) -> "BundleType":
        if not self.d1 >= self.d2 >= 0:
            raise ValueError(f"Bundle type must satisfy d1 >= d2 >= 0, got ({self.d1},{self.d2})")
        return self

    @classmethod
    def of(cls, d1: int, d2: int) -> "BundleType":
        return cls(d1=d1, d2=d2)

    def weights(self) -> Dict[str, Bidegree]:
        return {
            "t1": Bidegree(lambda_weight=1, mu_weight=0),
            "t2": Bidegree(lambda_weight=1, mu_weight=0),
            "x1": Bidegree(lambda_weight=self.d1, mu_weight=1),
            "x2": Bidegree(lambda_weight=self.d2, mu_weight=1),
            "x3": Bidegree(lambda_weight=0, mu_weight=1),
        }

    @property
    def degree_sum(self) -> int:
        return self.d1 + self.d2

    def __str__(self) -> str:
        return f"B({self.d1},{self.d2})"

    @property
    def label(self) -> str:
        return f"F({-self.d1},{-self.d2},0)"


class DivisorClass(BaseModel):
    """a*xi + b*F in Pic = Z*xi + Z*F."""

    model_config = ConfigDict(frozen=True)

    a: int
    b: int

    @classmethod
    def of(cls, a: int, b: int) -> "DivisorClass":
        return cls(a=a, b=b)

    @classmethod
    def from_bidegree(cls, degree: Bidegree) -> "DivisorClass":
        return cls(a=degree.mu_weight, b=degree.lambda_weight)

    def to_bidegree(self) -> Bidegree:
        return Bidegree(lambda_weight=self.b, mu_weight=self.a)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(a=self.a + other.a, b=self.b + other.b)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(a=self.a - other.a, b=self.b - other.b)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(a=-self.a, b=-self.b)

    def __mul__(self, k: int) -> "DivisorClass":
        return DivisorClass(a=k * self.a, b=k * self.b)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.a}*xi + {self.b}*f" if self.b >= 0 else f"{self.a}*xi - {-self.b}*f"


XI = DivisorClass(a=1, b=0)
FIBER = DivisorClass(a=0, b=1)
TRIVIAL = DivisorClass(a=0, b=0)


class NormalizedBundle(BaseModel):
    """F(e1,e2,e3) = F(-d1,-d2,0) after twisting by O(-shift) and sorting."""

    model_config = ConfigDict(frozen=True)

    bundle: BundleType
    shift: int
    permutation: Tuple[int, int, int]


# --- Operations ---

def normalize_bundle(e1: int, e2: int, e3: int) -> NormalizedBundle:
    """Twist by the largest entry and sort; permutation[k] is the source index of slot k."""
    entries = (e1, e2, e3)
    shift = max(entries)
    twisted = [shift - e for e in entries]
    order = sorted(range(3), key=lambda i: (-twisted[i], i))
    d = [twisted[i] for i in order]
    return NormalizedBundle(
        bundle=BundleType(d1=d[0], d2=d[1]),
        shift=shift,
        permutation=tuple(order),
    )


def linear_system_basis(bundle: BundleType, divisor: DivisorClass) -> List[Monomial]:
    """
    Monomials t1^b1 t2^b2 x1^a1 x2^a2 x3^a3 spanning |a*xi + b*F|:
    a1 + a2 + a3 = a and b1 + b2 = b - d1*a1 - d2*a2, all exponents >= 0.
    """
    a, b = divisor.a, divisor.b
    if a < 0:
        return []
    found = []
    for a1 in range(a + 1):
        for a2 in range(a - a1 + 1):
            a3 = a - a1 - a2
            rest = b - bundle.d1 * a1 - bundle.d2 * a2
            if rest < 0:
                continue
            for b1 in range(rest + 1):
                found.append(Monomial({"t1": b1, "t2": rest - b1, "x1": a1, "x2": a2, "x3": a3}))
    return sorted(found, key=Monomial.sort_key, reverse=True)


def section_count(bundle: BundleType, divisor: DivisorClass) -> int:
    """Closed form: sum over a1+a2+a3=a of max(0, b - d1*a1 - d2*a2 + 1)."""
    a, b = divisor.a, divisor.b
    if a < 0:
        return 0
    return sum(
        max(0, b - bundle.d1 * a1 - bundle.d2 * a2 + 1)
        for a1, a2 in itertools.product(range(a + 1), repeat=2)
        if a1 + a2 <= a
    )


def is_effective(bundle: BundleType, divisor: DivisorClass) -> bool:
    return divisor.a >= 0 and divisor.b >= 0


def generates_effective_cone(bundle: BundleType, first: DivisorClass, second: DivisorClass) -> bool:
    """The effective cone is spanned by xi and F; only that unordered pair generates it."""
    return {first, second} == {XI, FIBER}


def canonical_class(bundle: BundleType) -> DivisorClass:
    """The anticanonical class -K = 3*xi + (2 + d1 + d2)*F."""
    return DivisorClass(a=3, b=2 + bundle.degree_sum)


def restrict_to_fiber(divisor: DivisorClass) -> int:
    """Degree of O_{P^2}(k) obtained by restricting the class to a fiber."""
    return divisor.a


def intersection_number(
    bundle: BundleType, c1: DivisorClass, c2: DivisorClass, c3: DivisorClass
) -> int:
    """Trilinear extension of xi^3 = -(d1+d2), xi^2*F = 1, xi*F^2 = F^3 = 0."""
    xi_cubed = c1.a * c2.a * c3.a
    xi_squared_f = c1.a * c2.a * c3.b + c1.a * c2.b * c3.a + c1.b * c2.a * c3.a
    return -bundle.degree_sum * xi_cubed + xi_squared_f


def class_of_divisor(bundle: BundleType, p: Polynomial) -> DivisorClass:
    """(a, b) = (mu-weight, lambda-weight) of a nonzero, parameter-free bihomogeneous p."""
    if p.is_zero:
        raise ZeroPolynomialError("The zero polynomial defines no divisor")
    p.require_parameter_free()
    degree = bidegree_of(p, bundle.weights())
    if degree is None or degree is DegreeSentinel.ANY:
        raise HeterogeneousPolynomialError(f"{p} is not bihomogeneous on {bundle}")
    return DivisorClass.from_bidegree(degree)


# --- Descriptors ---

_BUNDLE_F_PATTERN = re.compile(r"^\s*F\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$", re.I)
_BUNDLE_B_PATTERN = re.compile(r"^\s*B\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$", re.I)
_CLASS_TERM_PATTERN = re.compile(r"([+-])?(\d+)?\*?(xi|f)?")
_ANTICANONICAL_ALIASES = ("-K", "-k")
_CANONICAL_ALIASES = ("K", "k")


def parse_bundle_descriptor(text: str) -> BundleType:
    """`F(e1,e2,e3)` (normalized on the way) or `B(d1,d2)`."""
    match = _BUNDLE_F_PATTERN.match(text)
    if match:
        return normalize_bundle(*(int(g) for g in match.groups())).bundle
    match = _BUNDLE_B_PATTERN.match(text)
    if match:
        d1, d2 = (int(g) for g in match.groups())
        if not d1 >= d2 >= 0:
            raise DescriptorError(f"B(d1,d2) needs d1 >= d2 >= 0, got {text.strip()!r}")
        return BundleType(d1=d1, d2=d2)
    raise DescriptorError(f"Unrecognized bundle descriptor {text!r}; use F(e1,e2,e3) or B(d1,d2)")


def parse_divisor_class(text: str, bundle: BundleType = None) -> DivisorClass:
    """`a*xi + b*f`, or `-K` / `K` (needs the bundle)."""
    compact = re.sub(r"\s+", "", text)
    if compact in _ANTICANONICAL_ALIASES + _CANONICAL_ALIASES:
        if bundle is None:
            raise DescriptorError("The canonical class needs a bundle (-b)")
        anticanonical = canonical_class(bundle)
        return anticanonical if compact in _ANTICANONICAL_ALIASES else -anticanonical
    if not compact:
        raise DescriptorError("Empty divisor class")
    a = b = 0
    pos = 0
    while pos < len(compact):
        match = _CLASS_TERM_PATTERN.match(compact, pos)
        if match is None or match.end() == pos:
            raise DescriptorError(f"Cannot read divisor class {text!r} at position {pos}")
        sign, digits, symbol = match.groups()
        if pos > 0 and sign is None:
            raise DescriptorError(f"Missing '+' or '-' in divisor class {text!r} at position {pos}")
        if digits is None and symbol is None:
            raise DescriptorError(f"Dangling sign in divisor class {text!r}")
        coeff = int(digits) if digits is not None else 1
        if sign == "-":
            coeff = -coeff
        if symbol == "xi":
            a += coeff
        elif symbol == "f":
            b += coeff
        elif coeff != 0:
            raise DescriptorError(f"Constant term {coeff} in divisor class {text!r}")
        pos = match.end()
    return DivisorClass(a=a, b=b)

