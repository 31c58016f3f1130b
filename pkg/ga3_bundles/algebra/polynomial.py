"""
Exact-rational polynomials over the fixed Cox/parameter variable set.

Arithmetic runs on a sympy sparse polynomial ring over QQ with a graded lexicographic
order in which t1 < t2 < x1 < x2 < x3 < u < v < w < u' < v' < w'. `Polynomial` is an
immutable wrapper that adds canonical printing, bigrading and substitution.
"""

from enum import Enum
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict
from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.orderings import MonomialOrder
from sympy.polys.rings import ring

from ga3_bundles.errors import ParameterInPolynomialError


VARIABLES: Tuple[str, ...] = ("t1", "t2", "x1", "x2", "x3", "u", "v", "w", "u'", "v'", "w'")
COX_VARIABLES: Tuple[str, ...] = VARIABLES[:5]
T_VARIABLES: Tuple[str, ...] = ("t1", "t2")
X_VARIABLES: Tuple[str, ...] = ("x1", "x2", "x3")
PARAMETERS: Tuple[str, ...] = ("u", "v", "w")
PRIMED_PARAMETERS: Tuple[str, ...] = ("u'", "v'", "w'")
VARIABLE_INDEX: Dict[str, int] = {name: i for i, name in enumerate(VARIABLES)}

Scalar = Union[int, Fraction]


class CoxGradedLex(MonomialOrder):
    """Total degree first, ties broken lexicographically with w' most significant."""

    alias = "cox-grlex"
    is_global = True

    def __call__(self, monomial):
        return (sum(monomial), tuple(reversed(monomial)))


MONOMIAL_ORDER = CoxGradedLex()

_RING, *_GENS = ring([Symbol(name) for name in VARIABLES], QQ, MONOMIAL_ORDER)
_ZERO_MONOM = (0,) * len(VARIABLES)


def _to_domain(value: Scalar):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _to_fraction(coeff) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


class Monomial:
    """Exponent vector over VARIABLES; absent exponents are zero."""

    __slots__ = ("exponents_tuple",)

    def __init__(self, exponents: Union[Mapping[str, int], Tuple[int, ...], None] = None):
        if exponents is None:
            vector = _ZERO_MONOM
        elif isinstance(exponents, tuple):
            vector = exponents
        else:
            values = [0] * len(VARIABLES)
            for name, exp in exponents.items():
                values[VARIABLE_INDEX[name]] = exp
            vector = tuple(values)
        if len(vector) != len(VARIABLES) or any(e < 0 for e in vector):
            raise ValueError(f"Invalid exponent vector: {vector}")
        self.exponents_tuple = vector

    @property
    def exponents(self) -> Dict[str, int]:
        return {VARIABLES[i]: e for i, e in enumerate(self.exponents_tuple) if e}

    @property
    def degree(self) -> int:
        return sum(self.exponents_tuple)

    def sort_key(self):
        return MONOMIAL_ORDER(self.exponents_tuple)

    def __lt__(self, other: "Monomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exponents_tuple == other.exponents_tuple

    def __hash__(self) -> int:
        return hash(self.exponents_tuple)

    def __str__(self) -> str:
        parts = []
        for name, exp in zip(VARIABLES, self.exponents_tuple):
            if exp == 1:
                parts.append(name)
            elif exp > 1:
                parts.append(f"{name}^{exp}")
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"Monomial({self})"


class Bidegree(BaseModel):
    """(lambda, mu) weight of the (Gm)^2 quotient action."""

    model_config = ConfigDict(frozen=True)

    lambda_weight: int
    mu_weight: int

    def __add__(self, other: "Bidegree") -> "Bidegree":
        return Bidegree(
            lambda_weight=self.lambda_weight + other.lambda_weight,
            mu_weight=self.mu_weight + other.mu_weight,
        )

    def __str__(self) -> str:
        return f"({self.lambda_weight},{self.mu_weight})"


ZERO_BIDEGREE = Bidegree(lambda_weight=0, mu_weight=0)


class DegreeSentinel(Enum):
    """Answer of bidegree_of for the zero polynomial."""

    ANY = "any"


class Polynomial:
    """Immutable exact-rational polynomial in the fixed variable set."""

    __slots__ = ("_element", "_hash")

    def __init__(self, element=None):
        self._element = _RING.zero if element is None else element
        self._hash = None

    # --- Constructors ---

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        return cls(_GENS[VARIABLE_INDEX[name]])

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls(_RING.from_dict({_ZERO_MONOM: _to_domain(value)}))

    @classmethod
    def from_terms(cls, terms: Mapping[Monomial, Scalar]) -> "Polynomial":
        return cls(_RING.from_dict({m.exponents_tuple: _to_domain(c) for m, c in terms.items()}))

    @property
    def element(self):
        """Underlying sympy ring element (read-only by convention)."""
        return self._element

    # --- Arithmetic ---

    @staticmethod
    def _coerce(other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(self._element + other._element)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(self._element - other._element)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(other._element - self._element)

    def __neg__(self):
        return Polynomial(-self._element)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(self._element * other._element)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Exponent must be a non-negative integer, got {exponent!r}")
        return Polynomial(self._element ** exponent)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._element == other._element

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._element.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._element)

    # --- Inspection ---

    @property
    def is_zero(self) -> bool:
        return not self._element

    def terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in descending monomial order."""
        items = sorted(self._element.items(), key=lambda kv: MONOMIAL_ORDER(kv[0]), reverse=True)
        return [(Monomial(m), _to_fraction(c)) for m, c in items]

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._element)

    def coefficient(self, monomial: Monomial) -> Fraction:
        coeff = self._element.get(monomial.exponents_tuple)
        return Fraction(0) if coeff is None else _to_fraction(coeff)

    def constant_term(self) -> Fraction:
        return self.coefficient(Monomial())

    def variables(self) -> Tuple[str, ...]:
        used = set()
        for monom in self._element:
            used.update(i for i, e in enumerate(monom) if e)
        return tuple(VARIABLES[i] for i in sorted(used))

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(m) for m in self._element), default=-1)

    def degree_in(self, name: str) -> int:
        index = VARIABLE_INDEX[name]
        return max((m[index] for m in self._element), default=0)

    def is_parameter_free(self) -> bool:
        return all(not any(m[5:]) for m in self._element)

    def require_parameter_free(self) -> "Polynomial":
        if not self.is_parameter_free():
            raise ParameterInPolynomialError(f"{self} involves action parameters")
        return self

    # --- Transformations ---

    def substitute(self, assignment: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Simultaneous substitution; unassigned variables map to themselves."""
        if not assignment:
            return self
        images = [assignment.get(name) for name in VARIABLES]
        powers: Dict[Tuple[int, int], object] = {}
        result = _RING.zero
        for monom, coeff in self._element.items():
            kept = list(monom)
            factor = _RING.one
            for i, exp in enumerate(monom):
                if exp and images[i] is not None:
                    kept[i] = 0
                    key = (i, exp)
                    if key not in powers:
                        powers[key] = images[i]._element ** exp
                    factor = factor * powers[key]
            result += factor.mul_term((tuple(kept), coeff))
        return Polynomial(result)

    def differentiate(self, name: str) -> "Polynomial":
        return Polynomial(self._element.diff(_GENS[VARIABLE_INDEX[name]]))

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a rational point; every occurring variable must be assigned."""
        missing = [name for name in self.variables() if name not in point]
        if missing:
            raise ValueError(f"No value given for {', '.join(missing)}")
        value = self.substitute({name: Polynomial.constant(c) for name, c in point.items()})
        return value.constant_term()

    def leading_monomial(self) -> Optional[Monomial]:
        return Monomial(self._element.LM) if self._element else None

    # --- Printing ---

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial('{self}')"

    # --- pydantic integration: accept Polynomial or text, dump as canonical text ---

    @classmethod
    def __get_pydantic_core_schema__(cls, source_type, handler):
        from pydantic_core import core_schema

        return core_schema.no_info_plain_validator_function(
            cls._validate,
            serialization=core_schema.plain_serializer_function_ser_schema(str, when_used="json"),
        )

    @classmethod
    def _validate(cls, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        if isinstance(value, str):
            from ga3_bundles.algebra.parser import parse

            return parse(value)
        raise ValueError(f"Cannot interpret {value!r} as a polynomial")


def _format_scalar(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def format_polynomial(p: Polynomial) -> str:
    """Canonical text: descending monomial order, explicit * and ^."""
    if p.is_zero:
        return "0"
    pieces = []
    for index, (monomial, coeff) in enumerate(p.terms()):
        magnitude = abs(coeff)
        if monomial.degree == 0:
            body = _format_scalar(magnitude)
        elif magnitude == 1:
            body = str(monomial)
        else:
            body = f"{_format_scalar(magnitude)}*{monomial}"
        if index == 0:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(pieces)


# --- Module-level operations ---

def var(name: str) -> Polynomial:
    return Polynomial.variable(name)


def const(value: Scalar) -> Polynomial:
    return Polynomial.constant(value)


ZERO = Polynomial()
ONE = Polynomial.constant(1)


def substitute(p: Polynomial, assignment: Mapping[str, Polynomial]) -> Polynomial:
    return p.substitute(assignment)


def differentiate(p: Polynomial, name: str) -> Polynomial:
    if name not in VARIABLE_INDEX:
        raise ValueError(f"Unknown variable {name!r}")
    return p.differentiate(name)


def bidegree_of(
    p: Polynomial, weights: Mapping[str, Bidegree]
) -> Union[Bidegree, DegreeSentinel, None]:
    """
    Common bidegree of all terms of p.

    Parameters (primed or not) weigh (0,0). Returns None for a heterogeneous polynomial and
    DegreeSentinel.ANY for the zero polynomial.
    """
    missing = [name for name in COX_VARIABLES if name not in weights]
    if missing:
        raise ValueError(f"Weight table lacks {', '.join(missing)}")
    if p.is_zero:
        return DegreeSentinel.ANY
    table = [weights.get(name, ZERO_BIDEGREE) for name in VARIABLES]
    found = None
    for monom in p.element:
        lam = sum(e * table[i].lambda_weight for i, e in enumerate(monom) if e)
        mu = sum(e * table[i].mu_weight for i, e in enumerate(monom) if e)
        if found is None:
            found = (lam, mu)
        elif found != (lam, mu):
            return None
    return Bidegree(lambda_weight=found[0], mu_weight=found[1])


def parameter_shift() -> Dict[str, Polynomial]:
    """u -> u + u', v -> v + v', w -> w + w' (the group-law target substitution)."""
    return {p: var(p) + var(q) for p, q in zip(PARAMETERS, PRIMED_PARAMETERS)}


def prime_parameters() -> Dict[str, Polynomial]:
    """u -> u', v -> v', w -> w'."""
    return {p: var(q) for p, q in zip(PARAMETERS, PRIMED_PARAMETERS)}


def zero_parameters() -> Dict[str, Polynomial]:
    return {p: ZERO for p in PARAMETERS}
