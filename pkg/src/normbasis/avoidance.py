"""Lattice-simplex avoidance search.

Given an independent family (e_1..e_n) and an exact nonvanishing test for a
polynomial map of total degree <= d, scan the integer simplex
{a in N^n : sum a_i <= d}.  The combinatorial nullstellensatz guarantees a
nonvanishing point in that simplex, so exhausting it signals a caller bug.

Visit order (part of the external contract): total degree sum(a) ascending,
ties in descending lexicographic order, i.e. (0,0), (1,0), (0,1), (2,0),
(1,1), (0,2), ...
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .errors import ExhaustedSimplex
from .numberfield import FieldElement, NumberField


@dataclass(frozen=True)
class PolynomialMap:
    """degree bounds the total degree of the induced polynomial; evaluate
    takes (coords, element) and returns an exact rational value or a bool
    verdict (True = nonzero).  Must be deterministic and exact."""

    degree: int
    evaluate: Callable[[tuple[int, ...], FieldElement], "Fraction | bool"]


def simplex_points(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """The documented total order on the simplex sum(a) <= d."""
    for s in range(d + 1):
        yield from _level(s, n)


def _level(s: int, n: int) -> Iterator[tuple[int, ...]]:
    if n == 1:
        yield (s,)
        return
    for a in range(s, -1, -1):
        for rest in _level(s - a, n - 1):
            yield (a,) + rest


def _is_nonzero(verdict) -> bool:
    if isinstance(verdict, bool):
        return verdict
    return verdict != 0


def simplex_search(field: NumberField, family, pmap: PolynomialMap,
                   exhaustive: bool = False, norm_key=None, visit_log=None):
    """First (or, in exhaustive mode, norm-minimal) nonvanishing point.

    Returns (coords, element, value).  In exhaustive mode the whole simplex
    is scanned and the hit minimizing (norm_key(element), visit index) is
    returned; norm_key defaults to the visit index only.
    """
    n = len(family)
    best = None
    for idx, coords in enumerate(simplex_points(n, pmap.degree)):
        element = field.zero()
        for a, e in zip(coords, family):
            if a:
                element = field.add(element, field.scal(a, e))
        value = pmap.evaluate(coords, element)
        if visit_log is not None:
            visit_log.append(coords)
        if not _is_nonzero(value):
            continue
        if not exhaustive:
            return coords, element, value
        key = (norm_key(element), idx) if norm_key is not None else (idx,)
        if best is None or key < best[0]:
            best = (key, coords, element, value)
    if best is not None:
        return best[1], best[2], best[3]
    raise ExhaustedSimplex(
        f"all {sum(1 for _ in simplex_points(n, pmap.degree))} candidates vanish; "
        "this contradicts the nullstellensatz preconditions")
