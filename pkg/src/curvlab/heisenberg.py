"""The discrete Heisenberg group in Mal'cev coordinates.

An element is a^A b^B c^C with c = a^-1 b^-1 a b central; the product law is
(A1,B1,C1)(A2,B2,C2) = (A1+A2, B1+B2, C1+C2 - A2*B1).  Conjugation fixes A
and B and shifts C: by +A per b-conjugation, by -B per a-conjugation, which
is what drives the whole sign analysis.

In the sector A > B > 0, C >= 0 the word length has a closed form, split at
the height boundary C = A^2 - A*B into a low and a high branch.  The density
experiment enumerates a margin-guarded sector where every radius-r conjugate
stays in the validated low branch, classifies the remainder s = C mod A into
the ceiling cases, and compares the predicted curvature sign against the
exact kappa computed from closed-form conjugate lengths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import NamedTuple, Optional

from .core import CurvlabError, GeneratorSet, GroupOracle, plain_decode, plain_encode

HEIS_ID = "Heis"


class MalcevTriple(NamedTuple):
    a: int
    b: int
    c: int


class OutOfSectorError(CurvlabError):
    """The closed length formula only covers A > B > 0, C >= 0; fall back to BFS."""


class DegenerateRemainderError(CurvlabError):
    """The ceiling case analysis excludes remainder s = 0 (A divides C)."""


class EmptySectorError(CurvlabError):
    pass


def heis_compose(x: MalcevTriple, y: MalcevTriple) -> MalcevTriple:
    return MalcevTriple(x.a + y.a, x.b + y.b, x.c + y.c - y.a * x.b)


def heis_invert(x: MalcevTriple) -> MalcevTriple:
    return MalcevTriple(-x.a, -x.b, -x.c - x.a * x.b)


def _ceildiv(p: int, q: int) -> int:
    return -(-p // q)


def heis_length(g: MalcevTriple) -> int:
    """Closed-form word length for A > B > 0, C >= 0.

    Low branch 2*ceil(C/A) + A + B for C <= A^2 - A*B, high branch
    2*ceil(2*sqrt(C + A*B)) - A - B above; the branches agree at the
    boundary.  C = 0 degenerates to the staircase word a^A b^B of length
    A + B, which the low branch returns.
    """
    A, B, C = g
    if not (A > B > 0 and C >= 0):
        raise OutOfSectorError(f"({A},{B},{C}) is outside the sector A > B > 0, C >= 0")
    if C <= A * A - A * B:
        return 2 * _ceildiv(C, A) + A + B
    n4 = 4 * (C + A * B)
    q = isqrt(n4)
    if q * q < n4:
        q += 1
    return 2 * q - A - B


def _heis_closed(g: MalcevTriple) -> Optional[int]:
    A, B, C = g
    if A > B > 0 and C >= 0:
        return heis_length(g)
    return None


def heis_oracle() -> GroupOracle:
    return GroupOracle(
        group_id=HEIS_ID,
        generator_set=GeneratorSet(("a", "a^-1", "b", "b^-1"), (1, 0, 3, 2)),
        generators=(
            MalcevTriple(1, 0, 0),
            MalcevTriple(-1, 0, 0),
            MalcevTriple(0, 1, 0),
            MalcevTriple(0, -1, 0),
        ),
        identity=MalcevTriple(0, 0, 0),
        compose=heis_compose,
        invert=heis_invert,
        encode=lambda el: plain_encode(tuple(el)),
        decode=lambda b: MalcevTriple(*plain_decode(b)),
        closed_length=_heis_closed,
    )


# ---------------------------------------------------------------------------
# Ceiling case analysis.  Write C = kA + s with 1 <= s <= A - 1.  For
# 1 <= B*t <= A:
#   ceil((C + Bt)/A) = k+2 if s > A - Bt else k+1
#   ceil((C - Bt)/A) = k+1 if s > Bt     else k
# The three cases partition the remainders when 2*B*t <= A:
#   X_t: s <= Bt   (conjugate pair shortens; positive curvature share)
#   Y_t: Bt < s <= A - Bt   (pair balances; zero share)
#   Z_t: s > A - Bt   (pair lengthens; negative share)


def heis_ceil_jump(A: int, B: int, C: int, t: int) -> tuple[int, int]:
    """(ceil((C+Bt)/A), ceil((C-Bt)/A)), via the case formula, checked directly."""
    if A <= 0 or B <= 0 or t <= 0:
        raise ValueError("need A, B, t positive")
    if B * t > A:
        raise OutOfSectorError(f"case formula needs B*t <= A, got B*t = {B * t} > A = {A}")
    s = C % A
    if s == 0:
        raise DegenerateRemainderError(f"A = {A} divides C = {C}")
    k = C // A
    plus = k + (2 if s > A - B * t else 1)
    minus = k + (1 if s > B * t else 0)
    direct = (_ceildiv(C + B * t, A), _ceildiv(C - B * t, A))
    if (plus, minus) != direct:
        raise ArithmeticError(f"case formula disagrees with direct ceiling at {(A, B, C, t)}")
    return plus, minus


def heis_case_label(A: int, B: int, s: int, t: int) -> str:
    """X / Y / Z / boundary for the remainder s at occurrence count t.

    The interval endpoints s = Bt and s = A - Bt are shared between adjacent
    cases and labelled 'boundary'; they are reported separately and excluded
    from sign prediction.
    """
    if not 1 <= s <= A - 1:
        raise DegenerateRemainderError(f"remainder {s} outside 1..{A - 1}")
    if s == B * t or s == A - B * t:
        return "boundary"
    if s < B * t:
        return "X"
    if s < A - B * t:
        return "Y"
    return "Z"


@dataclass(frozen=True)
class SectorSpec:
    """The margin-guarded low-height sector for comparison radius r.

    Conditions on (A, B, C): A > B > 0, C > 0, C - A*r >= 0, A - B >= 2r,
    A >= 5r with the band A/(5r) <= B <= 2A/(5r), and the low-height
    condition with a top margin, C <= A^2 - A*B - A*r, so that every
    conjugate by a radius-r element keeps a valid low-branch length.
    ``k``, when given, additionally bounds the word length.
    """

    r: int
    k: Optional[int] = None

    def admits(self, g: MalcevTriple) -> bool:
        A, B, C = g
        r = self.r
        if not (A > B > 0 and C > 0):
            return False
        if C - A * r < 0 or A - B < 2 * r:
            return False
        if A < 5 * r or A > 5 * r * B or 5 * r * B > 2 * A:
            return False
        if C > A * A - A * B - A * r:
            return False
        if self.k is not None and heis_length(g) > self.k:
            return False
        return True


def heis_conjugate_deltas(r: int) -> list[tuple[int, int]]:
    """(alpha, beta) exponent pairs of the sphere S_r; conjugation adds A*beta - alpha*B to C."""
    from .core import bfs_metric, sphere

    table = bfs_metric(heis_oracle(), r)
    return [(w.a, w.b) for w in sphere(table, r)]


def heis_kappa_exact(g: MalcevTriple, deltas: list[tuple[int, int]]) -> Fraction:
    """Exact kappa over the sphere whose (a, b) exponents are ``deltas``.

    Valid whenever every conjugate stays in the closed-form sector, which the
    SectorSpec margins guarantee.
    """
    A, B, C = g
    base = heis_length(g)
    total = 0
    for alpha, beta in deltas:
        total += heis_length(MalcevTriple(A, B, C + A * beta - alpha * B))
    return Fraction(base * len(deltas) - total, base * len(deltas))


def heis_sign_predict(g: MalcevTriple, r: int) -> str:
    """'+', '0', '-' when one case holds for every t <= r; 'mixed' otherwise.

    Remainder s = 0 and boundary labels yield 'mixed'; for the three pure
    outcomes the sign equals the sign of the exact kappa_r.
    """
    A, B, C = g
    if not SectorSpec(r).admits(g):
        raise OutOfSectorError(f"({A},{B},{C}) is outside the radius-{r} sector")
    s = C % A
    if s == 0:
        return "mixed"
    labels = {heis_case_label(A, B, s, t) for t in range(1, r + 1)}
    if labels == {"X"}:
        return "+"
    if labels == {"Y"}:
        return "0"
    if labels == {"Z"}:
        return "-"
    return "mixed"


# ---------------------------------------------------------------------------
# Density experiment


@dataclass(frozen=True)
class SectorElementRecord:
    triple: MalcevTriple
    length: int
    remainder: int
    labels: tuple[str, ...]  # per t = 1..r
    predicted: str
    kappa: Fraction


@dataclass(frozen=True)
class BandRow:
    """Remainder-class fractions for one (A, B) in the band.

    Closed counts credit each shared endpoint to both adjacent classes,
    which is the reading under which every class holds at least a 1/(5r)
    share; the boundary count is also reported on its own.
    """

    A: int
    B: int
    x_count: int
    y_count: int
    z_count: int
    boundary_count: int

    def fractions(self) -> tuple[Fraction, Fraction, Fraction]:
        n = self.A - 1
        return (
            Fraction(self.x_count, n),
            Fraction(self.y_count, n),
            Fraction(self.z_count, n),
        )


@dataclass
class DensityReport:
    r: int
    k: int
    sign_counts: dict = field(default_factory=dict)  # exact kappa signs
    predicted_counts: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)
    band_rows: list = field(default_factory=list)
    elements: list = field(default_factory=list)
    threshold: Fraction = Fraction(0)

    def all_signs_present(self) -> bool:
        return all(self.sign_counts.get(s, 0) > 0 for s in "+0-")

    def band_fractions_ok(self) -> bool:
        return all(
            frac >= self.threshold for row in self.band_rows for frac in row.fractions()
        )

    def to_json_dict(self) -> dict:
        return {
            "kind": "density",
            "radius": self.r,
            "k": self.k,
            "sign_counts": dict(self.sign_counts),
            "predicted_counts": dict(self.predicted_counts),
            "prediction_mismatches": len(self.mismatches),
            "all_signs_present": self.all_signs_present(),
            "band_threshold": f"{self.threshold.numerator}/{self.threshold.denominator}",
            "band_fractions_ok": self.band_fractions_ok(),
            "bands": [
                {
                    "A": row.A,
                    "B": row.B,
                    "x_fraction": str(row.fractions()[0]),
                    "y_fraction": str(row.fractions()[1]),
                    "z_fraction": str(row.fractions()[2]),
                    "boundary_count": row.boundary_count,
                }
                for row in self.band_rows
            ],
            "element_count": sum(self.sign_counts.values()),
        }


CSV_HEADER = ["A", "B", "C", "length", "s", "labels", "predicted", "kappa"]


def density_csv_rows(report: DensityReport) -> list[list]:
    rows = []
    for rec in report.elements:
        rows.append(
            [
                rec.triple.a,
                rec.triple.b,
                rec.triple.c,
                rec.length,
                rec.remainder,
                ";".join(rec.labels),
                rec.predicted,
                f"{rec.kappa.numerator}/{rec.kappa.denominator}",
            ]
        )
    return rows


def _band_counts(A: int, B: int, r: int) -> BandRow:
    x = y = z = boundary = 0
    for s in range(1, A):
        in_x = all(s <= B * t for t in range(1, r + 1))
        in_y = all(B * t <= s <= A - B * t for t in range(1, r + 1))
        in_z = all(s >= A - B * t for t in range(1, r + 1))
        x += in_x
        y += in_y
        z += in_z
        if any(s in (B * t, A - B * t) for t in range(1, r + 1)):
            boundary += 1
    return BandRow(A, B, x, y, z, boundary)


def heis_density_experiment(k: int, r: int, *, keep_elements: bool = False) -> DensityReport:
    """Exhaustive sweep of the radius-r sector within word length k.

    Counts exact curvature signs, checks every non-mixed prediction against
    the exact sign, and tallies per-(A, B) remainder-class fractions, each of
    which must reach 1/(5r) in the band.
    """
    if k <= 2 * r:
        raise EmptySectorError(f"need k > 2r, got k = {k}, r = {r}")
    deltas = heis_conjugate_deltas(r)
    report = DensityReport(r=r, k=k, threshold=Fraction(1, 5 * r))
    report.sign_counts = {"+": 0, "0": 0, "-": 0}
    report.predicted_counts = {"+": 0, "0": 0, "-": 0, "mixed": 0}
    spec = SectorSpec(r, k)
    seen_bands = set()
    found_any = False
    for A in range(5 * r, k):
        b_lo = _ceildiv(A, 5 * r)
        b_hi = (2 * A) // (5 * r)
        for B in range(max(1, b_lo), b_hi + 1):
            if A - B < 2 * r:
                continue
            # length <= k bounds ceil(C/A); intersect with the sector margins
            max_ceil = (k - A - B) // 2
            if max_ceil < r:
                continue
            c_hi = min(A * max_ceil, A * A - A * B - A * r)
            c_lo = A * r
            if c_hi < c_lo:
                continue
            if (A, B) not in seen_bands:
                seen_bands.add((A, B))
                report.band_rows.append(_band_counts(A, B, r))
            for C in range(c_lo, c_hi + 1):
                g = MalcevTriple(A, B, C)
                assert spec.admits(g)
                found_any = True
                s = C % A
                kap = heis_kappa_exact(g, deltas)
                sign = "+" if kap > 0 else ("-" if kap < 0 else "0")
                report.sign_counts[sign] += 1
                if s == 0:
                    predicted = "mixed"
                    labels: tuple[str, ...] = ("degenerate",)
                else:
                    labels = tuple(heis_case_label(A, B, s, t) for t in range(1, r + 1))
                    predicted = heis_sign_predict(g, r)
                report.predicted_counts[predicted] += 1
                if predicted in "+0-" and predicted != sign:
                    report.mismatches.append((g, predicted, sign))
                if keep_elements:
                    report.elements.append(
                        SectorElementRecord(g, heis_length(g), s, labels, predicted, kap)
                    )
    if not found_any:
        raise EmptySectorError(f"the radius-{r} sector is empty within length {k}")
    return report
