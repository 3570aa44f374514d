import logging
from itertools import product
from math import prod
from typing import List, Optional, Sequence, Tuple

from src.domain.entities.polytope import Face, FacetInequality, LatticePolytope
from src.domain.exceptions import ResourceLimitError
from src.domain.interfaces.lattice_point_counter import LatticePointCounter

logger = logging.getLogger(__name__)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


class BoxScanCounter(LatticePointCounter):
    """
    Contagem exaustiva na caixa inteira que envolve iF.

    As n-1 primeiras coordenadas são varridas; a última é resolvida de forma
    exata pelas desigualdades, o que poda cada linha da caixa de uma vez.
    """

    def __init__(self, max_scan_points: Optional[int] = None):
        self.max_scan_points = max_scan_points

    def count(
        self,
        polytope: LatticePolytope,
        facets: Sequence[FacetInequality],
        face: Face,
        dilation: int,
        interior: bool = False,
    ) -> int:
        if dilation < 1:
            raise ValueError("dilation must be >= 1")

        n = polytope.ambient_dim
        points = [polytope.vertices[i] for i in face.vertex_indices]
        low = [dilation * min(p[k] for p in points) for k in range(n)]
        high = [dilation * max(p[k] for p in points) for k in range(n)]

        box_size = prod(h - l + 1 for l, h in zip(low, high))
        if self.max_scan_points is not None and box_size > self.max_scan_points:
            raise ResourceLimitError(
                f"bounding box of {box_size} points exceeds the limit of "
                f"{self.max_scan_points} (use --force)"
            )

        tight = set(face.tight_facets)
        # (coeficientes das n-1 primeiras coordenadas, coeficiente da última, limite, igualdade)
        constraints: List[Tuple[Tuple[int, ...], int, int, bool]] = []
        for index, facet in enumerate(facets):
            bound = dilation * facet.offset
            is_equality = index in tight
            if interior and not is_equality:
                bound -= 1
            constraints.append((facet.normal[:-1], facet.normal[-1], bound, is_equality))

        total = 0
        prefix_ranges = [range(l, h + 1) for l, h in zip(low[:-1], high[:-1])]
        for prefix in product(*prefix_ranges):
            lo, hi = low[-1], high[-1]
            for head, last, bound, is_equality in constraints:
                rest = bound - sum(a * x for a, x in zip(head, prefix))
                if last == 0:
                    if rest < 0 or (is_equality and rest != 0):
                        lo, hi = 1, 0
                        break
                    continue
                if is_equality:
                    if rest % last:
                        lo, hi = 1, 0
                        break
                    value = rest // last
                    lo, hi = max(lo, value), min(hi, value)
                elif last > 0:
                    hi = min(hi, rest // last)
                else:
                    lo = max(lo, _ceil_div(rest, last))
                if lo > hi:
                    break
            if hi >= lo:
                total += hi - lo + 1
        return total
