"""Transport curvature: exact optimal assignment between uniform measures.

For basepoints x, y and a common support shape (the sphere or ball of radius
r), the measures are uniform on {x*w} and {y*w}.  Because both are uniform of
equal size, an optimal transport plan is a permutation, so the infimum is an
exact assignment optimum over the integer cost matrix d(x*u, y*v).  The
transport curvature is kappa* = 1 - T1/d(x, y); it always dominates the
comparison curvature, whose plan is the identity permutation.

The assignment step uses scipy's exact min-cost matching on integer costs;
all optima (up to a cap) are then enumerated by depth-first search with a
row-minimum bound, in deterministic lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional

import numpy as np
from scipy.optimize import linear_sum_assignment

from .core import Element, GroupOracle, MetricTable, ball, sphere, word_length

Support = Literal["sphere", "ball"]


class EqualPointsError(ValueError):
    pass


@dataclass(frozen=True)
class MeasureSpec:
    """Uniform measures at x and y supported on translated spheres or balls."""

    x: Element
    y: Element
    support: Support = "sphere"
    radius: int = 1


@dataclass(frozen=True)
class TransportResult:
    spec: MeasureSpec
    translators: tuple[Element, ...]  # the common w-support, in encode order
    cost: tuple[tuple[int, ...], ...]
    t1: Fraction
    permutations: tuple[tuple[int, ...], ...]  # optimal index bijections, lexicographic
    truncated: bool  # True when the enumeration hit the cap
    identity_optimal: bool
    distance: int  # d(x, y); 0 when x == y
    kappa_star: Optional[Fraction]  # None when x == y

    def to_json_dict(self, format_element=repr) -> dict:
        return {
            "kind": "transport",
            "x": format_element(self.spec.x),
            "y": format_element(self.spec.y),
            "support": self.spec.support,
            "radius": self.spec.radius,
            "cost": [list(row) for row in self.cost],
            "t1": f"{self.t1.numerator}/{self.t1.denominator}",
            "t1_float": float(self.t1),
            "optimal_permutations": [list(p) for p in self.permutations],
            "truncated": self.truncated,
            "identity_optimal": self.identity_optimal,
            "distance": self.distance,
            "kappa_star": None
            if self.kappa_star is None
            else f"{self.kappa_star.numerator}/{self.kappa_star.denominator}",
            "kappa_star_float": None if self.kappa_star is None else float(self.kappa_star),
        }


def solve_assignment(cost: list[list[int]]) -> int:
    """Exact minimum assignment cost of a square integer matrix."""
    rows, cols = linear_sum_assignment(np.asarray(cost, dtype=np.int64))
    return int(sum(cost[i][j] for i, j in zip(rows, cols)))


def enumerate_optimal(cost, optimum: int, cap: int = 1000) -> tuple[list[tuple[int, ...]], bool]:
    """All permutations achieving the optimum, lexicographically, up to cap."""
    n = len(cost)
    out: list[tuple[int, ...]] = []
    used = [False] * n
    perm = [0] * n

    def bound(i: int) -> int:
        # sum of per-row minima over free columns: a lower bound on any completion
        total = 0
        for k in range(i, n):
            total += min(cost[k][j] for j in range(n) if not used[j])
        return total

    def rec(i: int, partial: int) -> None:
        if i == n:
            out.append(tuple(perm))
            return
        for j in range(n):
            if used[j] or partial + cost[i][j] > optimum:
                continue
            used[j] = True
            perm[i] = j
            if partial + cost[i][j] + bound(i + 1) <= optimum:
                rec(i + 1, partial + cost[i][j])
            used[j] = False
            if len(out) >= cap:
                return

    rec(0, 0)
    return out, len(out) >= cap


def _translators(table: MetricTable, support: Support, radius: int):
    if support == "sphere":
        return sphere(table, radius)
    if support == "ball":
        return ball(table, radius)
    raise ValueError(f"support must be 'sphere' or 'ball', got {support!r}")


def transport_distance(
    oracle: GroupOracle,
    table: MetricTable,
    spec: MeasureSpec,
    *,
    cap: int = 1000,
    length_table: Optional[MetricTable] = None,
) -> TransportResult:
    """Exact T1 between the uniform measures of ``spec``, with all optimal plans.

    The identity permutation is the comparison-distance plan; whether it is
    among the optima is reported on the result.
    """
    if length_table is None:
        length_table = table
    ws = _translators(table, spec.support, spec.radius)
    xi = oracle.invert(spec.x)
    shift = oracle.compose(xi, spec.y)  # x^-1 y; costs are |u^-1 (x^-1 y) v|
    cost = []
    for u in ws:
        ui = oracle.invert(u)
        row = []
        left = oracle.compose(ui, shift)
        for v in ws:
            row.append(word_length(oracle, oracle.compose(left, v), length_table))
        cost.append(row)
    optimum = solve_assignment(cost)
    perms, truncated = enumerate_optimal(cost, optimum, cap)
    n = len(ws)
    identity_cost = sum(cost[i][i] for i in range(n))
    d = word_length(oracle, shift, length_table)
    t1 = Fraction(optimum, n)
    return TransportResult(
        spec=spec,
        translators=ws,
        cost=tuple(tuple(row) for row in cost),
        t1=t1,
        permutations=tuple(perms),
        truncated=truncated,
        identity_optimal=identity_cost == optimum,
        distance=d,
        kappa_star=None if d == 0 else 1 - t1 / d,
    )


def kappa_star(
    oracle: GroupOracle,
    table: MetricTable,
    x: Element,
    y: Element,
    support: Support = "sphere",
    radius: int = 1,
    *,
    length_table: Optional[MetricTable] = None,
) -> Fraction:
    """Transport curvature 1 - T1/d(x, y) for distinct basepoints."""
    if x == y:
        raise EqualPointsError("transport curvature is undefined for equal basepoints")
    result = transport_distance(
        oracle, table, MeasureSpec(x, y, support, radius), length_table=length_table
    )
    assert result.kappa_star is not None
    return result.kappa_star


def optimal_permutations(
    oracle: GroupOracle,
    table: MetricTable,
    g: Element,
    r: int,
    mode: Support = "sphere",
    *,
    cap: int = 1000,
    length_table: Optional[MetricTable] = None,
) -> TransportResult:
    """The optimal transport permutations from the identity to g.

    Sphere mode realizes the map into sym(S_r), ball mode the map into
    sym(B_r) (the ball support includes the identity point).
    """
    spec = MeasureSpec(oracle.identity, g, mode, r)
    return transport_distance(oracle, table, spec, cap=cap, length_table=length_table)


@dataclass(frozen=True)
class ProbeRow:
    element: Element
    identity_optimal: bool
    sphere_preserving_exists: bool
    block_plan_matches_ball: bool
    optima_count: int
    truncated: bool


@dataclass(frozen=True)
class ProbeReport:
    """Empirical answers, over a sample, to the optimal-plan structure questions.

    Never a theorem: reports whether the identity plan was always optimal,
    whether some ball optimum preserves every sphere, and whether stitching
    per-sphere optima together already achieves the ball optimum.
    """

    group_id: str
    radius: int
    rows: tuple[ProbeRow, ...]

    @property
    def identity_always_optimal(self) -> bool:
        return all(row.identity_optimal for row in self.rows)

    @property
    def identity_counterexamples(self) -> tuple[Element, ...]:
        return tuple(row.element for row in self.rows if not row.identity_optimal)

    def to_json_dict(self, format_element=repr) -> dict:
        return {
            "kind": "probe",
            "group": self.group_id,
            "radius": self.radius,
            "identity_always_optimal": self.identity_always_optimal,
            "identity_counterexamples": [
                format_element(e) for e in self.identity_counterexamples[:10]
            ],
            "rows": [
                {
                    "element": format_element(row.element),
                    "identity_optimal": row.identity_optimal,
                    "sphere_preserving_exists": row.sphere_preserving_exists,
                    "block_plan_matches_ball": row.block_plan_matches_ball,
                    "optima_count": row.optima_count,
                    "truncated": row.truncated,
                }
                for row in self.rows
            ],
        }


def question_probe(
    oracle: GroupOracle,
    table: MetricTable,
    r: int,
    elements,
    *,
    cap: int = 1000,
    length_table: Optional[MetricTable] = None,
) -> ProbeReport:
    """Probe the ball-optimum structure for each sampled element."""
    rows = []
    layer_sizes = [len(sphere(table, i)) for i in range(r + 1)]
    bounds = []
    start = 0
    for size in layer_sizes:
        bounds.append((start, start + size))
        start += size
    for g in elements:
        res = optimal_permutations(oracle, table, g, r, "ball", cap=cap, length_table=length_table)
        preserving = None
        for perm in res.permutations:
            if all(all(lo <= perm[i] < hi for i in range(lo, hi)) for lo, hi in bounds):
                preserving = perm
                break
        # Stitch per-sphere optima: cost of the best sphere-preserving plan.
        block_cost = 0
        for i, (lo, hi) in enumerate(bounds):
            if i == 0:
                block_cost += res.cost[0][0]
                continue
            sub = [[res.cost[u][v] for v in range(lo, hi)] for u in range(lo, hi)]
            block_cost += solve_assignment(sub)
        n = len(res.translators)
        rows.append(
            ProbeRow(
                element=g,
                identity_optimal=res.identity_optimal,
                sphere_preserving_exists=preserving is not None,
                block_plan_matches_ball=Fraction(block_cost, n) == res.t1,
                optima_count=len(res.permutations),
                truncated=res.truncated,
            )
        )
    return ProbeReport(oracle.group_id, r, tuple(rows))
