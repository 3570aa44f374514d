import logging
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import List, Sequence, Tuple

from src.application.services.involution import binomial
from src.application.services.polytope_geometry import is_smooth, vertex_cone_generators
from src.domain.entities.laurent_series import (
    TruncatedLaurentSeries,
    series_exp_linear,
    series_monomial,
    series_recip_one_minus_exp,
    truncation_order,
)
from src.domain.entities.polytope import LatticePolytope
from src.domain.entities.reports import IdentityCheck, Specialization, VertexData
from src.domain.exceptions import (
    ConsistencyError,
    DegenerateSpecializationError,
    NotSmoothError,
)

logger = logging.getLogger(__name__)


# Termos constantes de produtos de séries
def _validated(spec: Specialization, p: int) -> int:
    n = spec.n
    if not 0 <= p <= n:
        raise ValueError(f"p must lie in 0..{n}, got {p}")
    if any(x == 0 for x in spec.x):
        raise DegenerateSpecializationError("pole of undetermined order")
    return n


def _subset_constant_terms(
    spec: Specialization, p: int, factor
) -> Fraction:
    n = _validated(spec, p)
    window = truncation_order(n)
    exponential = series_exp_linear(spec.s, window)
    factors = [factor(Fraction(x), window) for x in spec.x]
    total = Fraction(0)
    for subset in combinations(range(n), p):
        series: TruncatedLaurentSeries = exponential
        for a in subset:
            series = series * factors[a]
        total += series.constant_term()
    return total


def ct_v_p(spec: Specialization, p: int) -> Fraction:
    """Termo constante de sum_{|J|=p} e^{ts} / prod_{a in J} (-t x_a)"""
    return _subset_constant_terms(
        spec, p, lambda x, window: series_monomial(-1 / x, -1, window)
    )


def ct_b_p(spec: Specialization, p: int) -> Fraction:
    """Termo constante de sum_{|J|=p} e^{ts} / prod_{a in J} (1 - e^{t x_a})"""
    return _subset_constant_terms(spec, p, series_recip_one_minus_exp)


def _identity_sides(spec: Specialization) -> Tuple[Fraction, Fraction]:
    n = spec.n
    lhs = sum(
        ((-1) ** (n - p) * factorial(p + 1) * ct_v_p(spec, p) for p in range(n + 1)),
        Fraction(0),
    )
    rhs = Fraction(0)
    odd = n % 2 == 1
    m = (n + 1) // 2 if odd else n // 2
    for p in range(m, n + 1):
        for i in range(1, p + 2 - m):
            if odd:
                weight = (-1) ** (m - i) * binomial(p + 1, m + i) * 2 * i
            else:
                weight = (
                    (-1) ** (m + 1 - i)
                    * (binomial(p + 1, m + i) - binomial(p + 1, m + i + 1))
                    * i
                )
            if weight:
                dilated = Specialization(s=-i * spec.s, x=spec.x)
                rhs += (-1) ** p * weight * ct_b_p(dilated, p)
    return lhs, rhs


def verify_symfun_identity(n: int, spec: Specialization) -> IdentityCheck:
    """
    Compara sum_p (-1)^{n-p} (p+1)! CTV_p(s, x) com a soma dos CTB_p(-is, x)
    ponderada como na fórmula por pontos interiores (pesos da paridade de n).
    """
    if spec.n != n:
        raise ValueError(f"specialization has {spec.n} x entries, expected {n}")
    _validated(spec, 0)
    lhs, rhs = _identity_sides(spec)
    return IdentityCheck(lhs=lhs, rhs=rhs)


# Lado do polítopo: somas sobre vértices
def choose_generic_covector(polytope: LatticePolytope) -> Tuple[int, ...]:
    """
    ξ = (1, M, M^2, ...) com M = 1 + maior amplitude de coordenada; M cresce
    até que nenhum gerador de aresta tenha pareamento nulo.
    """
    n = polytope.ambient_dim
    spread = max(
        max(v[k] for v in polytope.vertices) - min(v[k] for v in polytope.vertices)
        for k in range(n)
    )
    generators = [
        g for v in polytope.vertices for g in vertex_cone_generators(polytope, v)
    ]
    base = 1 + spread
    for _ in range(64):
        covector = tuple(base**k for k in range(n))
        if all(sum(a * b for a, b in zip(g, covector)) != 0 for g in generators):
            return covector
        base += 1
    raise DegenerateSpecializationError("no generic covector found")


def vertex_data(polytope: LatticePolytope, covector: Sequence[int]) -> List[VertexData]:
    """
    Raises:
        NotSmoothError: P não é liso
        DegenerateSpecializationError: algum <g_a, ξ> se anula
    """
    if len(covector) != polytope.ambient_dim:
        raise ValueError("covector dimension does not match the polytope")
    if not is_smooth(polytope):
        raise NotSmoothError("polytope not smooth")
    covector = tuple(covector)
    data = []
    for vertex in polytope.vertices:
        item = VertexData(
            vertex=vertex,
            generators=vertex_cone_generators(polytope, vertex),
            covector=covector,
        )
        for g, pairing in zip(item.generators, item.x):
            if pairing == 0:
                raise DegenerateSpecializationError(
                    f"xi not generic: <{g}, {covector}> = 0 at vertex {vertex}"
                )
        data.append(item)
    return data


def _specialize(item: VertexData) -> Specialization:
    return Specialization(s=Fraction(item.s), x=tuple(Fraction(x) for x in item.x))


def _as_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ConsistencyError(f"{what} is not an integer: {value}")
    return int(value)


def brion_count(polytope: LatticePolytope, covector: Sequence[int]) -> int:
    """|P ∩ Z^n| como soma das contribuições dos cones de vértice"""
    n = polytope.ambient_dim
    total = sum(
        (ct_b_p(_specialize(item), n) for item in vertex_data(polytope, covector)),
        Fraction(0),
    )
    return _as_integer(total, "Brion lattice-point sum")


def brion_volume(polytope: LatticePolytope, covector: Sequence[int]) -> int:
    n = polytope.ambient_dim
    total = factorial(n) * sum(
        (ct_v_p(_specialize(item), n) for item in vertex_data(polytope, covector)),
        Fraction(0),
    )
    return _as_integer(total, "Brion volume sum")


def verify_polytope_symfun_identity(
    polytope: LatticePolytope, covector: Sequence[int]
) -> IdentityCheck:
    """
    Os dois lados somados sobre os vértices. No lado B o vértice dilatado iv é
    pareado com -ξ (s = -i<v, ξ>) e os geradores mantêm x_a = <g_a, ξ>.
    """
    lhs = Fraction(0)
    rhs = Fraction(0)
    for item in vertex_data(polytope, covector):
        vertex_lhs, vertex_rhs = _identity_sides(_specialize(item))
        lhs += vertex_lhs
        rhs += vertex_rhs
    logger.debug(f"{polytope.label()}: identidade nos vértices {lhs} = {rhs}")
    return IdentityCheck(lhs=lhs, rhs=rhs)
