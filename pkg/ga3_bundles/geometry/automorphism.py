"""
Automorphisms of F(-d1,-d2,0) given by (Gm)^2-equivariant substitutions of the Cox
variables, and the normalization of a boundary pair (E, F) to ({x3 = 0}, {t1 = 0}).
"""

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator
from sympy import Matrix, Rational

from ga3_bundles.algebra.polynomial import (
    COX_VARIABLES,
    T_VARIABLES,
    X_VARIABLES,
    Monomial,
    Polynomial,
    bidegree_of,
    var,
)
from ga3_bundles.errors import BoundaryNormalizationError, InvalidAutomorphismError
from ga3_bundles.geometry.bundle import FIBER, XI, BundleType, class_of_divisor


def _linear_images(names: Sequence[str], matrix: Matrix) -> List[Polynomial]:
    images = []
    for i in range(len(names)):
        image = Polynomial()
        for j, name in enumerate(names):
            entry = matrix[i, j]
            if entry != 0:
                image = image + Fraction(int(entry.p), int(entry.q)) * var(name)
        images.append(image)
    return images


class CoxAutomorphism(BaseModel):
    """
    Pullback h*(y) for each Cox variable y, with the pullback of the inverse.

    As a map, h sends {p = 0} to {push_equation(p) = 0}.
    """

    model_config = ConfigDict(frozen=True)

    bundle: BundleType
    images: Tuple[Polynomial, Polynomial, Polynomial, Polynomial, Polynomial]
    inverse: Tuple[Polynomial, Polynomial, Polynomial, Polynomial, Polynomial]

    @model_validator(mode="after")
    def _check(self) -> "CoxAutomorphism":
        weights = self.bundle.weights()
        for name, image, back in zip(COX_VARIABLES, self.images, self.inverse):
            for poly in (image, back):
                if not poly.is_parameter_free():
                    raise InvalidAutomorphismError(f"Image {poly} of {name} involves parameters")
                if bidegree_of(poly, weights) != weights[name]:
                    raise InvalidAutomorphismError(
                        f"Image {poly} of {name} is not of bidegree {weights[name]} on {self.bundle}"
                    )
        forward, backward = self.as_mapping(), self.inverse_mapping()
        for name in COX_VARIABLES:
            if forward[name].substitute(backward) != var(name) or backward[name].substitute(forward) != var(name):
                raise InvalidAutomorphismError(f"Stored inverse does not invert the image of {name}")
        return self

    @classmethod
    def identity(cls, bundle: BundleType) -> "CoxAutomorphism":
        images = tuple(var(name) for name in COX_VARIABLES)
        return cls(bundle=bundle, images=images, inverse=images)

    @classmethod
    def from_linear(cls, bundle: BundleType, t_matrix: Matrix, x_matrix: Matrix) -> "CoxAutomorphism":
        """h*(t_i) = sum_j T[i,j] t_j and h*(x_i) = sum_j X[i,j] x_j."""
        if t_matrix.det() == 0 or x_matrix.det() == 0:
            raise InvalidAutomorphismError("Singular linear part")
        images = _linear_images(T_VARIABLES, t_matrix) + _linear_images(X_VARIABLES, x_matrix)
        inverse = _linear_images(T_VARIABLES, t_matrix.inv()) + _linear_images(X_VARIABLES, x_matrix.inv())
        return cls(bundle=bundle, images=tuple(images), inverse=tuple(inverse))

    def as_mapping(self) -> Dict[str, Polynomial]:
        return dict(zip(COX_VARIABLES, self.images))

    def inverse_mapping(self) -> Dict[str, Polynomial]:
        return dict(zip(COX_VARIABLES, self.inverse))

    def pullback(self, p: Polynomial) -> Polynomial:
        return p.substitute(self.as_mapping())

    def push_equation(self, p: Polynomial) -> Polynomial:
        """Equation of h({p = 0})."""
        return p.substitute(self.inverse_mapping())

    def inverse_automorphism(self) -> "CoxAutomorphism":
        return CoxAutomorphism(bundle=self.bundle, images=self.inverse, inverse=self.images)

    def compose(self, other: "CoxAutomorphism") -> "CoxAutomorphism":
        """The map self after other."""
        images = tuple(other.pullback(image) for image in self.images)
        inverse = tuple(self.push_equation(back) for back in other.inverse)
        return CoxAutomorphism(bundle=self.bundle, images=images, inverse=inverse)

    def is_identity(self) -> bool:
        return all(image == var(name) for name, image in zip(COX_VARIABLES, self.images))


def _rational(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def _linear_coefficients(p: Polynomial, names: Sequence[str]) -> List[Fraction]:
    coefficients = [p.coefficient(Monomial({name: 1})) for name in names]
    rebuilt = Polynomial()
    for coeff, name in zip(coefficients, names):
        rebuilt = rebuilt + coeff * var(name)
    if rebuilt != p:
        raise BoundaryNormalizationError(f"{p} is not a linear form in {', '.join(names)}")
    return coefficients


def normalize_boundary(bundle: BundleType, e_poly: Polynomial, f_poly: Polynomial) -> CoxAutomorphism:
    """
    Automorphism h with h({e_poly = 0}) = {x3 = 0} and h({f_poly = 0}) = {t1 = 0}.

    e_poly must have class xi (so it is c1*x1 + c2*x2 + c3*x3 with c_i = 0 unless d_i = 0)
    and f_poly class F. The x-part is the shear h*(x3) = e_poly / c3, preceded by the swap
    x_i <-> x3 when c3 = 0; the t-part is h*(t1) = f_poly / f1, or the swap t1 <-> t2.
    """
    if class_of_divisor(bundle, e_poly) != XI:
        raise BoundaryNormalizationError(f"{e_poly} is not of class xi on {bundle}")
    if class_of_divisor(bundle, f_poly) != FIBER:
        raise BoundaryNormalizationError(f"{f_poly} is not a fiber on {bundle}")

    c1, c2, c3 = _linear_coefficients(e_poly, X_VARIABLES)
    x_matrix = Matrix.eye(3)
    if c3 != 0:
        x_matrix[2, :] = Matrix([[_rational(c1 / c3), _rational(c2 / c3), 1]])
    else:
        pivot = 0 if c1 != 0 else 1
        coeffs = (c1, c2)
        x_matrix[pivot, :] = Matrix([[0, 0, 1]])
        row = [_rational(coeffs[k] / coeffs[pivot]) for k in range(2)] + [0]
        x_matrix[2, :] = Matrix([row])

    f1, f2 = _linear_coefficients(f_poly, T_VARIABLES)
    if f1 != 0:
        t_matrix = Matrix([[1, _rational(f2 / f1)], [0, 1]])
    else:
        t_matrix = Matrix([[0, 1], [1, 0]])

    return CoxAutomorphism.from_linear(bundle, t_matrix, x_matrix)
