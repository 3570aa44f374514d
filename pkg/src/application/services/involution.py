"""
A transformação S em vetores [E_0, ..., E_n], o funcional c(E) e as duas
formas (n ímpar / n par) da fórmula por valores em inteiros negativos.

Tudo aqui é independente de polítopos: os vetores podem ser constantes
(ScalarVector) ou polinomiais (PolyVector).
"""
from fractions import Fraction
from math import comb, factorial
from typing import List, Sequence, TypeVar, Union

from src.domain.entities.poly_vector import PolyVector, ScalarVector
from src.domain.entities.polynomial import RationalPolynomial, Scalar
from src.domain.entities.reports import GeneratingIdentityReport

Vector = TypeVar("Vector", PolyVector, ScalarVector)


def binomial(a: int, b: int) -> int:
    """C(a, b), nulo fora de 0 <= b <= a"""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def s_transform(vector: Vector) -> Vector:
    """F_p = sum_{j<=p} (-1)^j C(n-j, n-p) E_j, coeficiente a coeficiente"""
    n = vector.n
    entries = vector.entries
    image = []
    for p in range(n + 1):
        total = entries[0] * 0
        for j in range(p + 1):
            weight = (-1) ** j * binomial(n - j, n - p)
            if weight:
                total = total + entries[j] * weight
        image.append(total)
    return type(vector)(tuple(image))


def _as_poly_vector(vector: Union[PolyVector, ScalarVector]) -> PolyVector:
    if isinstance(vector, PolyVector):
        return vector
    return PolyVector(tuple(RationalPolynomial.constant(e) for e in vector.entries))


def check_generating_identity(
    vector: Union[PolyVector, ScalarVector], t0: Scalar = 0
) -> GeneratingIdentityReport:
    """
    Expande os dois lados de
        sum_p (-z)^p (z+1)^{n-p} E_p = sum_p z^p F_p
    como polinômios em z, com as entradas avaliadas em t0.
    """
    values = vector.evaluate(t0) if isinstance(vector, PolyVector) else vector
    image = s_transform(values)
    n = values.n
    z = RationalPolynomial.monomial(1)
    one_plus_z = z + 1
    lhs = RationalPolynomial.zero()
    rhs = RationalPolynomial.zero()
    for p in range(n + 1):
        lhs = lhs + (-z) ** p * one_plus_z ** (n - p) * values[p]
        rhs = rhs + z**p * image[p]
    return GeneratingIdentityReport(lhs_coeffs=lhs.coeffs, rhs_coeffs=rhs.coeffs)


def leading_volumes(vector: Union[PolyVector, ScalarVector]) -> List[Fraction]:
    """v_j = j! vezes o coeficiente de t^j em E_j"""
    poly = _as_poly_vector(vector)
    return [factorial(j) * poly[j].coefficient(j) for j in range(poly.n + 1)]


def c_of_vector(vector: Union[PolyVector, ScalarVector]) -> Fraction:
    volumes = leading_volumes(vector)
    n = len(volumes) - 1
    return sum(
        ((-1) ** (n - p) * (p + 1) * volumes[p] for p in range(n + 1)), Fraction(0)
    )


def c_via_theorem(vector: Union[PolyVector, ScalarVector]) -> Fraction:
    """
    c(E) calculado só com E_p(-i) + F_p(i) para p >= m e 1 <= i <= p+1-m.

    n ímpar usa m = (n+1)/2 e pesos C(p+1, m+i) i; n par usa m = n/2 e pesos
    (C(p+1, m+i) - C(p+1, m+i+1)) i/2. Para n = 0 a forma par é estendida
    formalmente e devolve E_0.
    """
    poly = _as_poly_vector(vector)
    image = s_transform(poly)
    n = poly.n
    total = Fraction(0)
    if n % 2 == 1:
        m = (n + 1) // 2
        for p in range(m, n + 1):
            for i in range(1, p + 2 - m):
                sign = (-1) ** (p + m - i)
                weight = binomial(p + 1, m + i) * i
                total += sign * weight * (poly[p](-i) + image[p](i))
    else:
        m = n // 2
        for p in range(m, n + 1):
            for i in range(1, p + 2 - m):
                sign = (-1) ** (p + 1 + m - i)
                weight = (binomial(p + 1, m + i) - binomial(p + 1, m + i + 1)) * Fraction(i, 2)
                total += sign * weight * (poly[p](-i) + image[p](i))
    return total


def product_coefficients(values: Sequence[Scalar]) -> List[Fraction]:
    """Coeficientes de prod_a (v_a z + 1), do grau 0 ao grau len(values)"""
    coeffs = [Fraction(1)]
    for value in values:
        shifted = [Fraction(0)] + [c * value for c in coeffs]
        coeffs = [a + b for a, b in zip(coeffs + [Fraction(0)], shifted)]
    return coeffs


def h_vector(f_vector: Union[ScalarVector, Sequence[Scalar]]) -> ScalarVector:
    """h_i definidos por sum_p f_p (z-1)^p = sum_i h_i z^i"""
    values = f_vector.entries if isinstance(f_vector, ScalarVector) else tuple(f_vector)
    z_minus_one = RationalPolynomial((Fraction(-1), Fraction(1)))
    total = RationalPolynomial.zero()
    for p, f in enumerate(values):
        total = total + z_minus_one**p * f
    return ScalarVector(tuple(total.coefficient(i) for i in range(len(values))))


def is_fixed_point(vector: Union[PolyVector, ScalarVector]) -> bool:
    return s_transform(vector) == vector
