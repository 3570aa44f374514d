from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from src.application.use_cases.verification_suite import SuiteReport
from src.domain.entities.polynomial import format_rational, polynomial_from_strings
from src.domain.entities.polytope import FaceLattice, LatticePolytope
from src.domain.entities.poly_vector import ScalarVector
from src.domain.entities.reports import DegreeReport, EhrhartVector, InteriorCountTable


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid")

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)


class InteriorCountRow(_Document):
    p: int
    i: int
    count: int


class Verdict(_Document):
    name: str
    passed: bool


class DegreeSection(_Document):
    c_volumes: int
    c_interior: Optional[int]
    per_dim_volume_sums: List[int]
    defective_criterion_fires: Optional[bool]
    dual_defective: bool
    is_simple: bool
    is_smooth: bool


class BrionSection(_Document):
    covector: List[int]
    lattice_points: int
    volume: int
    identity_lhs: str
    identity_rhs: str


def _ehrhart_rows(vector: EhrhartVector) -> List[List[str]]:
    return [entry.to_strings() for entry in vector.entries]


def _interior_rows(table: InteriorCountTable) -> List[InteriorCountRow]:
    return [
        InteriorCountRow(p=p, i=i, count=count) for (p, i), count in sorted(table.counts.items())
    ]


def _ehrhart_lines(rows: Sequence[Sequence[str]]) -> List[str]:
    return [f"  E_{k}(t) = {polynomial_from_strings(row)}" for k, row in enumerate(rows)]


def _interior_lines(rows: Sequence[InteriorCountRow], max_dilation: int) -> List[str]:
    table: Dict[int, Dict[int, int]] = {}
    for row in rows:
        table.setdefault(row.p, {})[row.i] = row.count
    header = "  p \\ i " + "".join(f"{i:>8}" for i in range(1, max_dilation + 1))
    lines = [header]
    for p in sorted(table):
        lines.append(f"  {p:>5} " + "".join(f"{table[p][i]:>8}" for i in sorted(table[p])))
    return lines


class ReportDocument(_Document):
    """Saída estruturada do comando analyze"""

    name: str
    ambient_dim: int
    vertices: List[List[int]]
    f_vector: List[int]
    h_vector: Optional[List[str]]
    ehrhart_vector: List[List[str]]
    max_dilation: int
    interior_counts: List[InteriorCountRow]
    degree: DegreeSection
    brion: Optional[BrionSection]
    verdicts: List[Verdict]
    caveats: List[str]

    @classmethod
    def from_analysis(
        cls,
        polytope: LatticePolytope,
        lattice: FaceLattice,
        vector: EhrhartVector,
        report: DegreeReport,
        verdicts: Sequence[Verdict],
        h_vector: Optional[ScalarVector] = None,
    ) -> "ReportDocument":
        brion = None
        if report.brion is not None:
            brion = BrionSection(
                covector=list(report.brion.covector),
                lattice_points=report.brion.lattice_points,
                volume=report.brion.volume,
                identity_lhs=format_rational(report.brion.identity.lhs),
                identity_rhs=format_rational(report.brion.identity.rhs),
            )
        return cls(
            name=polytope.label(),
            ambient_dim=polytope.ambient_dim,
            vertices=[list(v) for v in polytope.vertices],
            f_vector=list(lattice.f_vector),
            h_vector=None if h_vector is None else [format_rational(h) for h in h_vector.entries],
            ehrhart_vector=_ehrhart_rows(vector),
            max_dilation=report.interior_table.max_dilation,
            interior_counts=_interior_rows(report.interior_table),
            degree=DegreeSection(
                c_volumes=report.c_volumes,
                c_interior=report.c_interior,
                per_dim_volume_sums=list(report.per_dim_volume_sums),
                defective_criterion_fires=report.defective_criterion_fires,
                dual_defective=report.dual_defective,
                is_simple=report.is_simple,
                is_smooth=report.is_smooth,
            ),
            brion=brion,
            verdicts=list(verdicts),
            caveats=list(report.caveats),
        )

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def to_text(self) -> str:
        degree = self.degree
        lines = [
            f"Polytope {self.name} (n = {self.ambient_dim}, {len(self.vertices)} vertices)",
            f"  f-vector: {self.f_vector}",
        ]
        if self.h_vector is not None:
            lines.append(f"  h-vector: [{', '.join(self.h_vector)}]")
        lines.append(f"  simple: {degree.is_simple}  smooth: {degree.is_smooth}")
        lines.append("Ehrhart vector:")
        lines.extend(_ehrhart_lines(self.ehrhart_vector))
        lines.append(f"Interior counts I_p(i), i = 1..{self.max_dilation}:")
        lines.extend(_interior_lines(self.interior_counts, self.max_dilation))
        lines.append("Degree:")
        lines.append(f"  c(P) via volumes:         {degree.c_volumes}")
        lines.append(f"  per-dimension volume sums: {degree.per_dim_volume_sums}")
        if degree.c_interior is not None:
            lines.append(f"  c(P) via interior points: {degree.c_interior}")
        if degree.defective_criterion_fires is not None:
            lines.append(f"  defectivity criterion:    {degree.defective_criterion_fires}")
        lines.append(f"  dual defective:           {degree.dual_defective}")
        if self.brion is not None:
            lines.append(f"Vertex cones (xi = {tuple(self.brion.covector)}):")
            lines.append(f"  lattice points: {self.brion.lattice_points}")
            lines.append(f"  volume:         {self.brion.volume}")
            lines.append(f"  identity:       {self.brion.identity_lhs} = {self.brion.identity_rhs}")
        lines.append("Checks:")
        lines.extend(f"  [{'ok' if v.passed else 'FAIL'}] {v.name}" for v in self.verdicts)
        lines.extend(f"Note: {caveat}" for caveat in self.caveats)
        return "\n".join(lines)


class EhrhartDocument(_Document):
    """Saída estruturada do comando ehrhart"""

    name: str
    ambient_dim: int
    f_vector: List[int]
    ehrhart_vector: List[List[str]]
    max_dilation: int
    interior_counts: List[InteriorCountRow]

    @classmethod
    def from_tables(
        cls,
        polytope: LatticePolytope,
        lattice: FaceLattice,
        vector: EhrhartVector,
        table: InteriorCountTable,
    ) -> "EhrhartDocument":
        return cls(
            name=polytope.label(),
            ambient_dim=polytope.ambient_dim,
            f_vector=list(lattice.f_vector),
            ehrhart_vector=_ehrhart_rows(vector),
            max_dilation=table.max_dilation,
            interior_counts=_interior_rows(table),
        )

    def to_text(self) -> str:
        lines = [f"Polytope {self.name} (n = {self.ambient_dim}), f-vector {self.f_vector}"]
        lines.append("Ehrhart vector:")
        lines.extend(_ehrhart_lines(self.ehrhart_vector))
        lines.append(f"Interior counts I_p(i), i = 1..{self.max_dilation}:")
        lines.extend(_interior_lines(self.interior_counts, self.max_dilation))
        return "\n".join(lines)


class PropertySection(_Document):
    name: str
    checked: int
    failed: int
    passed: bool
    first_failure: Optional[str]


class SuiteSection(_Document):
    suite: str
    passed: bool
    properties: List[PropertySection]


class VerifyDocument(_Document):
    """Saída estruturada do comando verify"""

    seed: int
    passed: bool
    suites: List[SuiteSection]

    @classmethod
    def from_reports(cls, seed: int, reports: Sequence[SuiteReport]) -> "VerifyDocument":
        suites = [
            SuiteSection(
                suite=report.suite,
                passed=report.passed,
                properties=[
                    PropertySection(
                        name=prop.name,
                        checked=prop.checked,
                        failed=prop.failed,
                        passed=prop.passed,
                        first_failure=prop.first_failure,
                    )
                    for prop in report.properties
                ],
            )
            for report in reports
        ]
        return cls(seed=seed, passed=all(s.passed for s in suites), suites=suites)

    def to_text(self) -> str:
        lines = [f"Verification (seed {self.seed})"]
        for suite in self.suites:
            lines.append(f"{suite.suite}: {'pass' if suite.passed else 'FAIL'}")
            for prop in suite.properties:
                status = "ok" if prop.passed else "FAIL"
                lines.append(f"  [{status}] {prop.name}: {prop.checked} checked, {prop.failed} failed")
                if prop.first_failure:
                    lines.append(f"         first failure: {prop.first_failure}")
        lines.append("all properties pass" if self.passed else "some properties FAILED")
        return "\n".join(lines)
