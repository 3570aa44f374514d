from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from src.domain.exceptions import InterpolationError

Rational = Fraction
Scalar = Union[int, Fraction]


def format_rational(value: Fraction) -> str:
    """Forma canônica "p/q" (ou "p" quando inteiro) usada em relatórios"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class RationalPolynomial:
    """
    Polinômio denso em uma variável t com coeficientes racionais exatos.

    coeffs[k] é o coeficiente de t^k; zeros à direita são sempre removidos,
    de modo que o polinômio nulo tem coeffs vazio e grau -1.
    """

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        values = [Fraction(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def constant(cls, value: Scalar) -> RationalPolynomial:
        return cls((Fraction(value),))

    @classmethod
    def monomial(cls, degree: int, value: Scalar = 1) -> RationalPolynomial:
        return cls((Fraction(0),) * degree + (Fraction(value),))

    @classmethod
    def zero(cls) -> RationalPolynomial:
        return cls(())

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, t: Scalar) -> Fraction:
        # Horner
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * t + c
        return result

    def reflect(self) -> RationalPolynomial:
        """Retorna o polinômio t -> P(-t)"""
        return RationalPolynomial(
            c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)
        )

    def __add__(self, other: Union[RationalPolynomial, Scalar]) -> RationalPolynomial:
        other = _promote(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(
            self.coefficient(k) + other.coefficient(k) for k in range(size)
        )

    __radd__ = __add__

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: Union[RationalPolynomial, Scalar]) -> RationalPolynomial:
        return self + (-_promote(other))

    def __rsub__(self, other: Scalar) -> RationalPolynomial:
        return _promote(other) - self

    def __mul__(self, other: Union[RationalPolynomial, Scalar]) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            factor = Fraction(other)
            return RationalPolynomial(c * factor for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return RationalPolynomial.zero()
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return RationalPolynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> RationalPolynomial:
        if exponent < 0:
            raise ValueError("negative exponent")
        result = RationalPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def to_strings(self) -> List[str]:
        return [format_rational(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = format_rational(magnitude)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if magnitude == 1 else f"{format_rational(magnitude)}*{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _promote(value: Union[RationalPolynomial, Scalar]) -> RationalPolynomial:
    if isinstance(value, RationalPolynomial):
        return value
    return RationalPolynomial.constant(value)


def lagrange_interpolate(points: Sequence[Tuple[int, Scalar]]) -> RationalPolynomial:
    """
    Polinômio único de grau < len(points) que passa por todos os pontos.

    Raises:
        InterpolationError: lista vazia ou argumentos repetidos
    """
    if not points:
        raise InterpolationError("empty interpolation input")
    nodes = [Fraction(x) for x, _ in points]
    if len(set(nodes)) != len(nodes):
        raise InterpolationError("duplicate interpolation node")

    result = RationalPolynomial.zero()
    for i, (_, value) in enumerate(points):
        basis = RationalPolynomial.constant(1)
        denominator = Fraction(1)
        for j, node in enumerate(nodes):
            if j == i:
                continue
            basis = basis * RationalPolynomial((-node, Fraction(1)))
            denominator *= nodes[i] - node
        result = result + basis * (Fraction(value) / denominator)
    return result


def polynomial_from_strings(values: Iterable[str]) -> RationalPolynomial:
    return RationalPolynomial(Fraction(v) for v in values)
