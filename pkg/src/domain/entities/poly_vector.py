from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from src.domain.entities.polynomial import RationalPolynomial, Scalar


@dataclass(frozen=True)
class PolyVector:
    """
    Elemento [E_0, ..., E_n] de P_n: polinômios em t com grau E_j <= j.
    """

    entries: Tuple[RationalPolynomial, ...]

    def __post_init__(self):
        entries = tuple(
            e if isinstance(e, RationalPolynomial) else RationalPolynomial.constant(e)
            for e in self.entries
        )
        if not entries:
            raise ValueError("a PolyVector needs at least one entry")
        for j, entry in enumerate(entries):
            if entry.degree > j:
                raise ValueError(f"entry {j} has degree {entry.degree} > {j}")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.entries) - 1

    def evaluate(self, t: Scalar) -> ScalarVector:
        return ScalarVector(tuple(e(t) for e in self.entries))

    def __getitem__(self, index: int) -> RationalPolynomial:
        return self.entries[index]


@dataclass(frozen=True)
class ScalarVector:
    """Caso constante de PolyVector (vetores f, coeficientes de produtos)"""

    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(Fraction(e) for e in self.entries)
        if not entries:
            raise ValueError("a ScalarVector needs at least one entry")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, values: Iterable[Scalar]) -> ScalarVector:
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, index: int) -> Fraction:
        return self.entries[index]
