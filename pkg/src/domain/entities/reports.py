from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from src.domain.entities.polynomial import RationalPolynomial


@dataclass(frozen=True)
class EhrhartVector:
    """[E_0^P(t), ..., E_n^P(t)] com E_k^P = soma de ehr_F sobre as k-faces"""

    entries: Tuple[RationalPolynomial, ...]

    @property
    def n(self) -> int:
        return len(self.entries) - 1


@dataclass(frozen=True)
class InteriorCountTable:
    """I_p(i): pontos no interior relativo das p-faces dilatadas por i"""

    counts: Dict[Tuple[int, int], int]
    max_dilation: int

    def get(self, p: int, i: int) -> int:
        return self.counts[(p, i)]

    def dimensions(self) -> Tuple[int, ...]:
        return tuple(sorted({p for p, _ in self.counts}))


@dataclass(frozen=True)
class IdentityCheck:
    """Resultado de uma identidade verificada: os dois lados e a igualdade"""

    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class GeneratingIdentityReport:
    lhs_coeffs: Tuple[Fraction, ...]
    rhs_coeffs: Tuple[Fraction, ...]

    @property
    def equal(self) -> bool:
        return self.lhs_coeffs == self.rhs_coeffs


@dataclass(frozen=True)
class Specialization:
    s: Fraction
    x: Tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.x)


@dataclass(frozen=True)
class VertexData:
    vertex: Tuple[int, ...]
    generators: Tuple[Tuple[int, ...], ...]
    covector: Tuple[int, ...]

    @property
    def s(self) -> int:
        return sum(a * b for a, b in zip(self.vertex, self.covector))

    @property
    def x(self) -> Tuple[int, ...]:
        return tuple(
            sum(a * b for a, b in zip(g, self.covector)) for g in self.generators
        )


@dataclass(frozen=True)
class BrionSummary:
    covector: Tuple[int, ...]
    lattice_points: int
    volume: int
    identity: IdentityCheck


@dataclass(frozen=True)
class DegreeReport:
    c_volumes: int
    c_interior: Optional[int]
    per_dim_volume_sums: Tuple[int, ...]
    interior_table: InteriorCountTable
    defective_criterion_fires: Optional[bool]
    is_smooth: bool
    is_simple: bool
    brion: Optional[BrionSummary] = None
    caveats: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def dual_defective(self) -> bool:
        return self.c_volumes == 0
