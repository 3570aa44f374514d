import pytest

from src.application.services.polytope_families import family_from_spec
from src.application.services.polytope_geometry import build_polytope
from src.application.use_cases.degree_calculator import DiscriminantDegreeUseCase
from src.application.use_cases.ehrhart_calculator import EhrhartCalculatorUseCase
from src.application.use_cases.verification_suite import VerificationSuiteUseCase
from src.infrastructure.counting.box_scan_counter import BoxScanCounter


@pytest.fixture
def counter():
    return BoxScanCounter(max_scan_points=10**6)


@pytest.fixture
def ehrhart(counter):
    return EhrhartCalculatorUseCase(counter)


@pytest.fixture
def degree(ehrhart):
    return DiscriminantDegreeUseCase(ehrhart)


@pytest.fixture
def verification(ehrhart, degree):
    return VerificationSuiteUseCase(ehrhart, degree)


@pytest.fixture
def unit_square():
    return build_polytope([[0, 0], [1, 0], [0, 1], [1, 1]], name="unit square")


@pytest.fixture
def thin_triangle():
    # simples, mas o cone no vértice (0, 1) tem índice 2
    return build_polytope([[0, 0], [2, 0], [0, 1]], name="thin triangle")


@pytest.fixture
def family():
    return family_from_spec
