"""Comparison distances over spheres and balls, and the curvature kappa_r.

For a nonidentity element g, the comparison distance at radius r averages the
conjugate lengths |w^-1 g w| over w in the sphere S_r (sphere mode) or the
ball B_r (ball mode); the curvature is (|g| - average) / |g|.  All values are
exact rationals: the sign of kappa is the headline output and is never
subjected to floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional

from .core import (
    Element,
    GroupOracle,
    IdentityElementError,
    MetricTable,
    ball,
    sphere,
    word_length,
)

Mode = Literal["sphere", "ball"]


@dataclass(frozen=True)
class CurvatureReport:
    """Full record of one curvature computation.

    ``breakdown`` lists (conjugator w, |w^-1 g w|) in the deterministic
    sphere/ball order; the comparison distance is the exact mean of the
    breakdown lengths and kappa = (|g| - comparison) / |g|.
    """

    element: Element
    radius: int
    mode: Mode
    base_length: int
    comparison: Fraction
    kappa: Fraction
    breakdown: tuple[tuple[Element, int], ...]

    def to_json_dict(self, format_element=repr) -> dict:
        return {
            "kind": "curvature",
            "element": format_element(self.element),
            "radius": self.radius,
            "mode": self.mode,
            "base_length": self.base_length,
            "comparison_distance": rational_str(self.comparison),
            "comparison_distance_float": float(self.comparison),
            "kappa": rational_str(self.kappa),
            "kappa_float": float(self.kappa),
            "breakdown": [
                {"conjugator": format_element(w), "conjugate_length": length}
                for w, length in self.breakdown
            ],
        }

    def csv_rows(self, format_element=repr) -> list[list]:
        rows = []
        for w, length in self.breakdown:
            rows.append(
                [
                    format_element(self.element),
                    self.radius,
                    self.mode,
                    self.base_length,
                    format_element(w),
                    length,
                    rational_str(self.kappa),
                ]
            )
        return rows


CSV_HEADER = ["element", "radius", "mode", "base_length", "conjugator", "conjugate_length", "kappa"]


def rational_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _conjugator_set(table: MetricTable, r: int, mode: Mode):
    if mode == "sphere":
        return sphere(table, r)
    if mode == "ball":
        return ball(table, r)
    raise ValueError(f"mode must be 'sphere' or 'ball', got {mode!r}")


def conjugate_breakdown(
    oracle: GroupOracle,
    table: MetricTable,
    g: Element,
    r: int,
    mode: Mode = "sphere",
    length_table: Optional[MetricTable] = None,
) -> tuple[tuple[Element, int], ...]:
    """(w, |w^-1 g w|) for every w in S_r or B_r, in deterministic order.

    ``table`` enumerates the conjugators and only needs horizon >= r; conjugate
    lengths fall back to the oracle's closed form, or to ``length_table`` when
    given (defaults to ``table``).
    """
    if g == oracle.identity:
        raise IdentityElementError("comparison distances are undefined at the identity")
    if r < 1:
        raise ValueError("radius must be at least 1")
    if length_table is None:
        length_table = table
    out = []
    for w in _conjugator_set(table, r, mode):
        out.append((w, word_length(oracle, oracle.conjugate(g, w), length_table)))
    return tuple(out)


def comparison_distance(
    oracle: GroupOracle,
    table: MetricTable,
    g: Element,
    r: int,
    mode: Mode = "sphere",
    length_table: Optional[MetricTable] = None,
) -> Fraction:
    """Exact average of |w^-1 g w| over the chosen conjugator set."""
    breakdown = conjugate_breakdown(oracle, table, g, r, mode, length_table)
    return Fraction(sum(length for _, length in breakdown), len(breakdown))


def kappa(
    oracle: GroupOracle,
    table: MetricTable,
    g: Element,
    r: int,
    mode: Mode = "sphere",
    length_table: Optional[MetricTable] = None,
) -> CurvatureReport:
    """The comparison curvature kappa_r of g, with its full conjugator breakdown."""
    breakdown = conjugate_breakdown(oracle, table, g, r, mode, length_table)
    base = word_length(oracle, g, length_table if length_table is not None else table)
    comparison = Fraction(sum(length for _, length in breakdown), len(breakdown))
    return CurvatureReport(
        element=g,
        radius=r,
        mode=mode,
        base_length=base,
        comparison=comparison,
        kappa=Fraction(base - comparison, base),
        breakdown=breakdown,
    )


def gencon(
    oracle: GroupOracle,
    table: MetricTable,
    g: Element,
    length_table: Optional[MetricTable] = None,
) -> Fraction:
    """Average generator-conjugate length: the radius-1 sphere comparison distance.

    Kept as a named operation because it doubles as the identity transport
    plan in the transport module.
    """
    return comparison_distance(oracle, table, g, 1, "sphere", length_table)
