from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import List, Tuple, Union

from src.domain.entities.polynomial import Scalar
from src.domain.exceptions import DegenerateSpecializationError, SeriesWindowError


def truncation_order(ambient_dim: int) -> int:
    """Janela padrão dos cálculos de termo constante: max_order = n + 2"""
    return ambient_dim + 2


_BERNOULLI: List[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def _extend_bernoulli(k: int) -> None:
    # estende a tabela compartilhada até o índice k, sob o lock
    with _BERNOULLI_LOCK:
        for m in range(len(_BERNOULLI), k + 1):
            if m > 1 and m % 2 == 1:
                _BERNOULLI.append(Fraction(0))
                continue
            total = sum(comb(m + 1, j) * _BERNOULLI[j] for j in range(m) if _BERNOULLI[j])
            _BERNOULLI.append(-total / (m + 1))


def bernoulli(k: int) -> Fraction:
    """
    k-ésimo número de Bernoulli com a convenção B_1 = -1/2.

    Usa a recorrência sum_{j=0}^{k} C(k+1, j) B_j = 0 em aritmética exata.
    """
    if k < 0:
        raise ValueError("bernoulli index must be >= 0")
    if k >= len(_BERNOULLI):
        _extend_bernoulli(k)
    return _BERNOULLI[k]


@dataclass(frozen=True)
class TruncatedLaurentSeries:
    """
    Série de Laurent em t com coeficientes racionais, conhecida exatamente
    nas ordens min_order..max_order.

    coeffs[k - min_order] é o coeficiente de t^k. Coeficientes acima de
    max_order não existem; a janela garantida diminui a cada produto por
    uma série com parte principal.
    """

    min_order: int
    coeffs: Tuple[Fraction, ...]
    max_order: int

    def __post_init__(self):
        size = max(self.max_order - self.min_order + 1, 0)
        values = [Fraction(c) for c in self.coeffs][:size]
        values += [Fraction(0)] * (size - len(values))
        object.__setattr__(self, "coeffs", tuple(values))

    def coefficient(self, order: int) -> Fraction:
        if order > self.max_order:
            raise SeriesWindowError(
                f"order {order} outside guaranteed window (max_order={self.max_order})"
            )
        if order < self.min_order:
            return Fraction(0)
        return self.coeffs[order - self.min_order]

    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def __add__(self, other: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
        low = min(self.min_order, other.min_order)
        high = min(self.max_order, other.max_order)
        return TruncatedLaurentSeries(
            low,
            tuple(self.coefficient(k) + other.coefficient(k) for k in range(low, high + 1)),
            high,
        )

    def __neg__(self) -> TruncatedLaurentSeries:
        return TruncatedLaurentSeries(
            self.min_order, tuple(-c for c in self.coeffs), self.max_order
        )

    def __sub__(self, other: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
        return self + (-other)

    def __mul__(
        self, other: Union[TruncatedLaurentSeries, Scalar]
    ) -> TruncatedLaurentSeries:
        if not isinstance(other, TruncatedLaurentSeries):
            factor = Fraction(other)
            return TruncatedLaurentSeries(
                self.min_order, tuple(c * factor for c in self.coeffs), self.max_order
            )
        low = self.min_order + other.min_order
        high = min(
            self.max_order + other.min_order, other.max_order + self.min_order
        )
        product = []
        for k in range(low, high + 1):
            total = Fraction(0)
            for i in range(self.min_order, self.max_order + 1):
                j = k - i
                if j < other.min_order:
                    break
                if j <= other.max_order:
                    total += self.coeffs[i - self.min_order] * other.coeffs[j - other.min_order]
            product.append(total)
        return TruncatedLaurentSeries(low, tuple(product), high)

    __rmul__ = __mul__

    def agrees_with(self, other: TruncatedLaurentSeries) -> bool:
        """Compara coeficientes na janela garantida comum às duas séries"""
        low = min(self.min_order, other.min_order)
        high = min(self.max_order, other.max_order)
        return all(self.coefficient(k) == other.coefficient(k) for k in range(low, high + 1))


def series_constant(value: Scalar, max_order: int) -> TruncatedLaurentSeries:
    return TruncatedLaurentSeries(0, (Fraction(value),), max_order)


def series_monomial(value: Scalar, order: int, max_order: int) -> TruncatedLaurentSeries:
    """value * t^order, exata em toda a janela"""
    if max_order < order:
        return TruncatedLaurentSeries(order, (), max_order)
    return TruncatedLaurentSeries(order, (Fraction(value),), max_order)


def series_exp_linear(c: Scalar, max_order: int) -> TruncatedLaurentSeries:
    """Série de e^{ct} = sum_k c^k t^k / k! truncada em max_order"""
    if max_order < 0:
        raise SeriesWindowError("exponential series needs max_order >= 0")
    c = Fraction(c)
    return TruncatedLaurentSeries(
        0, tuple(c**k / factorial(k) for k in range(max_order + 1)), max_order
    )


def series_recip_one_minus_exp(x: Scalar, max_order: int) -> TruncatedLaurentSeries:
    """
    Expansão de Laurent de 1/(1 - e^{tx}).

    1/(1 - e^u) = -(1/u) sum_k B_k u^k / k!, logo o coeficiente de t^{k-1}
    é -B_k x^{k-1} / k!.
    """
    x = Fraction(x)
    if x == 0:
        raise DegenerateSpecializationError("pole of undetermined order")
    if max_order < -1:
        raise SeriesWindowError("window must include order -1")
    coeffs = tuple(
        -bernoulli(k) * x ** (k - 1) / factorial(k) for k in range(max_order + 2)
    )
    return TruncatedLaurentSeries(-1, coeffs, max_order)
