from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

Scalar = Union[int, Fraction]


def _normalize(value: Rational) -> Scalar:
    value = Fraction(value)
    return int(value) if value.denominator == 1 else value


class LaurentPoly:
    """A Laurent polynomial in ``t`` with exact rational coefficients.

    Zero coefficients are never stored and integral coefficients are kept as ``int``,
    so an Alexander polynomial is integral exactly when ``is_integral`` holds.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Optional[Mapping[int, Rational]] = None) -> None:
        normalized = {}
        for exponent, coefficient in (coefficients or {}).items():
            if coefficient != 0:
                normalized[int(exponent)] = _normalize(coefficient)
        self._coefficients: Dict[int, Scalar] = dict(sorted(normalized.items()))

    @classmethod
    def monomial(cls, coefficient: Rational, exponent: int = 0) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @classmethod
    def from_json(cls, data: Mapping[str, Union[int, str]]) -> "LaurentPoly":
        return cls({int(exponent): int(coefficient) for exponent, coefficient in data.items()})

    @property
    def coefficients(self) -> Dict[int, Scalar]:
        return dict(self._coefficients)

    def items(self) -> Iterator[Tuple[int, Scalar]]:
        return iter(self._coefficients.items())

    def is_zero(self) -> bool:
        return not self._coefficients

    @property
    def min_exponent(self) -> int:
        return min(self._coefficients)

    @property
    def max_exponent(self) -> int:
        return max(self._coefficients)

    @property
    def breadth(self) -> int:
        """Difference of the extreme exponents; 0 for the zero polynomial."""
        if self.is_zero():
            return 0
        return self.max_exponent - self.min_exponent

    @property
    def top_coefficient(self) -> Scalar:
        return self._coefficients[self.max_exponent] if self._coefficients else 0

    @property
    def bottom_coefficient(self) -> Scalar:
        return self._coefficients[self.min_exponent] if self._coefficients else 0

    def is_integral(self) -> bool:
        return all(isinstance(coefficient, int) for coefficient in self._coefficients.values())

    def is_palindromic(self) -> bool:
        return all(self._coefficients.get(-e) == c for e, c in self._coefficients.items())

    def evaluate(self, t: Rational) -> Scalar:
        if t == 0 and self._coefficients and self.min_exponent < 0:
            raise ZeroDivisionError("Negative powers of t are undefined at t = 0")
        return _normalize(sum(Fraction(t) ** e * c for e, c in self._coefficients.items()))

    def shift(self, exponent: int) -> "LaurentPoly":
        """Multiplication by ``t^exponent``."""
        return LaurentPoly({e + exponent: c for e, c in self._coefficients.items()})

    def to_json(self) -> Dict[str, int]:
        if not self.is_integral():
            raise ValueError(f"Only integral polynomials serialize to JSON, got {self}")
        return {str(e): int(c) for e, c in self._coefficients.items()}

    def _coerce(self, other: object) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, Rational):
            return LaurentPoly.monomial(other)
        return None

    def __add__(self, other: object) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        total = dict(self._coefficients)
        for e, c in other._coefficients.items():
            total[e] = total.get(e, 0) + c
        return LaurentPoly(total)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coefficients.items()})

    def __sub__(self, other: object) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "LaurentPoly":
        return -self + other

    def __mul__(self, other: object) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        product: Dict[int, Scalar] = {}
        for e1, c1 in self._coefficients.items():
            for e2, c2 in other._coefficients.items():
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(product)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(tuple(self._coefficients.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({self._coefficients!r})"

    def __str__(self) -> str:
        """Ascending terms with explicit signs, e.g. ``-t^-1 + 7 - t``."""
        if not self._coefficients:
            return "0"

        terms = []
        for exponent, coefficient in self._coefficients.items():
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "t" if exponent == 1 else f"t^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"

            if not terms:
                terms.append(f"-{body}" if coefficient < 0 else body)
            else:
                terms.append(f"{'-' if coefficient < 0 else '+'} {body}")
        return " ".join(terms)
