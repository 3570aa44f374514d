import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

import sympy as sp

from src.application.services import symfun
from src.application.services.involution import (
    c_of_vector,
    c_via_theorem,
    check_generating_identity,
    h_vector,
    product_coefficients,
    s_transform,
)
from src.application.services.polytope_families import corpus, gen_family
from src.application.services.polytope_geometry import (
    face_lattice,
    is_smooth,
    transform_polytope,
)
from src.application.use_cases.degree_calculator import DiscriminantDegreeUseCase
from src.application.use_cases.ehrhart_calculator import EhrhartCalculatorUseCase
from src.domain.entities.poly_vector import PolyVector, ScalarVector
from src.domain.entities.polynomial import RationalPolynomial
from src.domain.entities.polytope import LatticePolytope
from src.domain.entities.reports import Specialization
from src.domain.exceptions import DegenerateSpecializationError

logger = logging.getLogger(__name__)


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failed: int = 0
    first_failure: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failed == 0 and self.checked > 0


@dataclass
class SuiteReport:
    suite: str
    seed: int
    properties: List[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)


class _Tally:
    """Acumula verificações por propriedade, na ordem em que aparecem"""

    def __init__(self):
        self.results: Dict[str, PropertyResult] = {}

    def check(self, name: str, condition: bool, detail: Callable[[], str] = lambda: "") -> None:
        result = self.results.setdefault(name, PropertyResult(name=name))
        result.checked += 1
        if not condition:
            result.failed += 1
            if result.first_failure is None:
                result.first_failure = detail()


# Geradores aleatórios (determinísticos pela semente)
def random_rational(rng: random.Random, bound: int = 20, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, 9))
        if value or not nonzero:
            return value


def random_poly_vector(rng: random.Random, n: int) -> PolyVector:
    return PolyVector(
        tuple(
            RationalPolynomial(tuple(random_rational(rng) for _ in range(j + 1)))
            for j in range(n + 1)
        )
    )


def random_unimodular(rng: random.Random, n: int, bound: int = 3) -> List[List[int]]:
    for _ in range(100000):
        matrix = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if abs(sp.Matrix(matrix).det()) == 1:
            return matrix
    raise RuntimeError("no unimodular matrix found")


class VerificationSuiteUseCase:
    """Caso de uso que executa as suítes de propriedades de forma determinística"""

    def __init__(self, ehrhart: EhrhartCalculatorUseCase, degree: DiscriminantDegreeUseCase):
        self.ehrhart = ehrhart
        self.degree = degree
        self._corpus: Optional[List[LatticePolytope]] = None
        self.suites: Dict[str, Callable[[random.Random, _Tally], None]] = {
            "involution": self._involution,
            "dehn-sommerville": self._dehn_sommerville,
            "reciprocity": self._reciprocity,
            "theorem-nill": self._theorem_nill,
            "theorem-degree": self._theorem_degree,
            "symfun": self._symfun,
            "brion": self._brion,
        }

    def available_suites(self) -> List[str]:
        return list(self.suites) + ["all"]

    def run(self, suite: str, seed: int) -> List[SuiteReport]:
        """
        Executa uma suíte (ou todas). Cada suíte usa um gerador próprio
        semeado por (seed, nome), então "all" reproduz as suítes isoladas.
        """
        if suite not in self.available_suites():
            raise ValueError(f"unknown suite '{suite}'")
        names = list(self.suites) if suite == "all" else [suite]
        reports = []
        for name in names:
            logger.info(f"Executando suíte {name} (seed {seed})")
            rng = random.Random(f"{seed}:{name}")
            tally = _Tally()
            self.suites[name](rng, tally)
            reports.append(SuiteReport(suite=name, seed=seed, properties=list(tally.results.values())))
        return reports

    def corpus(self) -> List[LatticePolytope]:
        if self._corpus is None:
            self._corpus = corpus()
        return self._corpus

    # --- suítes -----------------------------------------------------------

    def _involution(self, rng: random.Random, tally: _Tally) -> None:
        for _ in range(1000):
            vector = random_poly_vector(rng, rng.randint(0, 8))
            tally.check("s_squared_is_identity", s_transform(s_transform(vector)) == vector,
                        lambda: f"n={vector.n}")
        for _ in range(200):
            vector = random_poly_vector(rng, rng.randint(0, 8))
            report = check_generating_identity(vector, random_rational(rng))
            tally.check("generating_identity", report.equal,
                        lambda: f"lhs={report.lhs_coeffs} rhs={report.rhs_coeffs}")
        for _ in range(100):
            xs = [random_rational(rng) for _ in range(rng.randint(1, 6))]
            image = s_transform(ScalarVector.of(product_coefficients(xs)))
            expected = ScalarVector.of(product_coefficients([1 - x for x in xs]))
            tally.check("elementary_symmetric_example", image == expected, lambda: f"x={xs}")

            def v(x: Fraction) -> Fraction:
                return x * x + 2

            def w(y: Fraction) -> Fraction:
                return 1 - v(-y)

            image = s_transform(ScalarVector.of(product_coefficients([v(x) for x in xs])))
            expected = ScalarVector.of(product_coefficients([w(-x) for x in xs]))
            tally.check("general_pair_example", image == expected, lambda: f"x={xs}")

    def _dehn_sommerville(self, rng: random.Random, tally: _Tally) -> None:
        for polytope in self.corpus():
            f = ScalarVector.of(face_lattice(polytope).f_vector)
            ehrhart = PolyVector(self.ehrhart.ehrhart_vector(polytope).entries)
            image = s_transform(ehrhart)
            h = h_vector(f)
            tally.check("f_vector_fixed", s_transform(f) == f, lambda: polytope.label())
            tally.check(
                "extended_dehn_sommerville",
                all(image[p] == ehrhart[p].reflect() for p in range(ehrhart.n + 1)),
                lambda: polytope.label(),
            )
            tally.check("h_vector_symmetric", h.entries == h.entries[::-1], lambda: polytope.label())
            tally.check(
                "euler_relation",
                sum((-1) ** p * fp for p, fp in enumerate(f.entries)) == 1,
                lambda: polytope.label(),
            )

        pyramid = gen_family("square_pyramid")
        f = ScalarVector.of(face_lattice(pyramid).f_vector)
        ehrhart = PolyVector(self.ehrhart.ehrhart_vector(pyramid).entries)
        image = s_transform(ehrhart)
        tally.check("pyramid_f_vector_not_fixed", s_transform(f) != f)
        tally.check(
            "pyramid_extended_identity_fails",
            any(image[p] != ehrhart[p].reflect() for p in range(ehrhart.n + 1)),
        )
        h = h_vector(f)
        tally.check("pyramid_h_vector_not_symmetric", h.entries != h.entries[::-1])

    def _reciprocity(self, rng: random.Random, tally: _Tally) -> None:
        for polytope in self.corpus() + [gen_family("square_pyramid")]:
            lattice = face_lattice(polytope)
            for face in lattice.all_faces():
                ehr = self.ehrhart.ehrhart_polynomial(polytope, face)
                tally.check("ehrhart_degree_and_volume",
                            ehr.degree == face.dim and ehr.leading_coefficient > 0,
                            lambda: f"{polytope.label()} face {face.vertex_indices}")
                subfaces = [g for g in lattice.all_faces() if g.is_subface_of(face)]
                for i in range(1, 5):
                    interior = self.ehrhart.count_interior_points(polytope, face, i)
                    tally.check("ehrhart_macdonald_reciprocity",
                                (-1) ** face.dim * ehr(-i) == interior,
                                lambda: f"{polytope.label()} face {face.vertex_indices} i={i}")
                    pieces = sum(self.ehrhart.count_interior_points(polytope, g, i) for g in subfaces)
                    tally.check("relative_interiors_partition_face",
                                pieces == self.ehrhart.count_lattice_points(polytope, face, i),
                                lambda: f"{polytope.label()} face {face.vertex_indices} i={i}")
            vector = self.ehrhart.ehrhart_vector(polytope)
            tally.check("ehrhart_vector_at_zero_is_f_vector",
                        tuple(e(0) for e in vector.entries) == lattice.f_vector,
                        lambda: polytope.label())

    def _theorem_nill(self, rng: random.Random, tally: _Tally) -> None:
        for n in range(1, 7):
            for _ in range(500):
                vector = random_poly_vector(rng, n)
                tally.check(f"c_via_theorem_n{n}", c_via_theorem(vector) == c_of_vector(vector),
                            lambda: f"n={n}")

    def _theorem_degree(self, rng: random.Random, tally: _Tally) -> None:
        for polytope in self.corpus():
            by_volumes, _ = self.degree.degree_via_volumes(polytope)
            by_interior = self.degree.degree_via_interior_points(polytope)
            tally.check("volumes_equal_interior_points", by_volumes == by_interior,
                        lambda: f"{polytope.label()}: {by_volumes} vs {by_interior}")
            if self.degree.defectivity_criterion(polytope):
                tally.check("criterion_implies_zero_degree", by_volumes == 0,
                            lambda: polytope.label())
            self._check_monotonicity(polytope, tally)

        for d in range(1, 11):
            c, _ = self.degree.degree_via_volumes(gen_family("segment", [d]))
            tally.check("segment_closed_form", c == 2 * (d - 1), lambda: f"d={d}: {c}")
        for d in range(1, 6):
            c, _ = self.degree.degree_via_volumes(gen_family("simplex", [2, d]))
            tally.check("plane_curve_closed_form", c == 3 * (d - 1) ** 2, lambda: f"d={d}: {c}")
        square_c, _ = self.degree.degree_via_volumes(gen_family("cube", [2]))
        tally.check("unit_square_degree", square_c == 2, lambda: str(square_c))

        expectations = {2: False, 3: True, 4: True}
        for n, expected in expectations.items():
            prism = gen_family("prism", [n])
            tally.check("prism_defectivity_criterion",
                        self.degree.defectivity_criterion(prism) is expected,
                        lambda: f"prism:{n}")

        for polytope in [p for p in self.corpus() if p.ambient_dim <= 3][:8]:
            reference, _ = self.degree.degree_via_volumes(polytope)
            for _ in range(2):
                matrix = random_unimodular(rng, polytope.ambient_dim)
                shift = [rng.randint(-3, 3) for _ in range(polytope.ambient_dim)]
                image = transform_polytope(polytope, matrix, shift)
                moved, _ = self.degree.degree_via_volumes(image)
                tally.check("lattice_invariance", moved == reference,
                            lambda: f"{polytope.label()} U={matrix}")

    def _check_monotonicity(self, polytope: LatticePolytope, tally: _Tally) -> None:
        # maior m com iP sem pontos interiores para todo i <= m
        lattice = face_lattice(polytope)
        whole = lattice.polytope_face()
        n = polytope.ambient_dim
        m = 0
        while m < n + 1 and self.ehrhart.count_interior_points(polytope, whole, m + 1) == 0:
            m += 1
        for k in range(1, n + 1):
            for face in lattice.faces(n - k):
                for i in range(1, m - k + 1):
                    tally.check("stanley_monotonicity",
                                self.ehrhart.count_interior_points(polytope, face, i) == 0,
                                lambda: f"{polytope.label()} face {face.vertex_indices} i={i}")

    def _symfun(self, rng: random.Random, tally: _Tally) -> None:
        for n in range(1, 5):
            for _ in range(50):
                spec = Specialization(
                    s=random_rational(rng),
                    x=tuple(random_rational(rng, nonzero=True) for _ in range(n)),
                )
                check = symfun.verify_symfun_identity(n, spec)
                tally.check(f"symfun_identity_n{n}", check.equal,
                            lambda: f"{spec}: {check.lhs} vs {check.rhs}")
                p = rng.randint(0, n)
                shuffled = list(spec.x)
                rng.shuffle(shuffled)
                permuted = Specialization(s=spec.s, x=tuple(shuffled))
                tally.check("constant_terms_symmetric",
                            symfun.ct_b_p(spec, p) == symfun.ct_b_p(permuted, p)
                            and symfun.ct_v_p(spec, p) == symfun.ct_v_p(permuted, p))
                negated = Specialization(s=-spec.s, x=tuple(-x for x in spec.x))
                tally.check("ctb_invariant_under_t_reflection",
                            symfun.ct_b_p(spec, p) == symfun.ct_b_p(negated, p))

        for polytope in self.corpus():
            if not is_smooth(polytope):
                continue
            covector = symfun.choose_generic_covector(polytope)
            check = symfun.verify_polytope_symfun_identity(polytope, covector)
            c, _ = self.degree.degree_via_volumes(polytope)
            tally.check("vertex_identity_equals_degree", check.equal and check.lhs == c,
                        lambda: f"{polytope.label()}: {check.lhs}, {check.rhs}, c={c}")

    def _generic_covectors(
        self, polytope: LatticePolytope, rng: random.Random, count: int
    ) -> List[Tuple[int, ...]]:
        covectors = [symfun.choose_generic_covector(polytope)]
        while len(covectors) < count:
            candidate = tuple(rng.randint(-9, 9) for _ in range(polytope.ambient_dim))
            try:
                symfun.vertex_data(polytope, candidate)
            except DegenerateSpecializationError:
                continue
            covectors.append(candidate)
        return covectors

    def _brion(self, rng: random.Random, tally: _Tally) -> None:
        for polytope in self.corpus():
            if not is_smooth(polytope):
                continue
            whole = face_lattice(polytope).polytope_face()
            points = self.ehrhart.count_lattice_points(polytope, whole, 1)
            volume = self.ehrhart.normalized_volume(polytope, whole)
            for covector in self._generic_covectors(polytope, rng, 3):
                tally.check("brion_count", symfun.brion_count(polytope, covector) == points,
                            lambda: f"{polytope.label()} xi={covector}")
                tally.check("brion_volume", symfun.brion_volume(polytope, covector) == volume,
                            lambda: f"{polytope.label()} xi={covector}")
