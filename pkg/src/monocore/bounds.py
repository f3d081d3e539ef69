"""Exact evaluation of the closed-form bounds on monochromatic d-subgraph order.

Rational bounds come back as :class:`fractions.Fraction`.  Square-root
bounds carry their exact radicand; the decimal is for display only.
Inapplicable parameters set ``applicable=False`` instead of raising so
sweeps can tabulate every regime.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, sqrt


@dataclass(frozen=True)
class BoundsReport:
    name: str
    value: Fraction | int | None
    applicable: bool
    preconditions_checked: list[str] = field(default_factory=list)
    radicand: Fraction | None = None
    notes: str = ""

    @property
    def decimal(self) -> float | None:
        if self.radicand is not None:
            return sqrt(self.radicand) if self.radicand > 0 else 0.0
        return None if self.value is None else float(self.value)

    def as_dict(self) -> dict:
        out = {
            "name": self.name,
            "value": None if self.value is None else str(self.value),
            "decimal": self.decimal,
            "applicable": self.applicable,
            "preconditions_checked": list(self.preconditions_checked),
        }
        if self.radicand is not None:
            out["radicand"] = str(self.radicand)
        if self.notes:
            out["notes"] = self.notes
        return out


def thm1_slope(k: int, d: int) -> Fraction:
    return Fraction(k - 4 * d + 4, 2 * (k - 3 * d + 3))


def lower_bound_thm1(n: int, k: int, d: int) -> BoundsReport:
    """(k-4d+4)/(2(k-3d+3)) n + 3d(d-1)/(4(k-3d+3)), valid for k >= 4d-3."""
    pre = f"k >= 4d-3 ({k} >= {4 * d - 3})"
    if k < 4 * d - 3:
        return BoundsReport("thm1", None, False, [pre + ": false"])
    value = thm1_slope(k, d) * n + Fraction(3 * d * (d - 1), 4 * (k - 3 * d + 3))
    return BoundsReport("thm1", value, True, [pre + ": true"])


def upper_bound_thm2_slope(n: int, k: int, d: int, r: int) -> BoundsReport:
    """Linear term n(k-2r(d-1))/(r(k-(r+1)(d-1))); the additive constant is left unspecified."""
    pre = f"k > 2r(d-1) ({k} > {2 * r * (d - 1)})"
    if r < 1 or k <= 2 * r * (d - 1):
        return BoundsReport("thm2slope", None, False, [pre + ": false"])
    value = Fraction(n * (k - 2 * r * (d - 1)), r * (k - (r + 1) * (d - 1)))
    return BoundsReport("thm2slope", value, True, [pre + ": true"],
                        notes="plus an unspecified additive constant")


def thm3_threshold(k: int, d: int) -> Fraction:
    return Fraction(7 * (k + 2 * d), 2)


def exact_thm3(n: int, k: int, d: int) -> BoundsReport:
    """Exact value n-2d-k+3 for graphs of minimum degree n-k and large n.

    ``applicable`` reports whether n reaches 7(k+2d)/2; below it the value is
    still returned but unproven.
    """
    thr = thm3_threshold(k, d)
    ok = n >= thr
    pre = [f"n >= 7(k+2d)/2 ({n} >= {thr}): {str(ok).lower()}"]
    return BoundsReport("thm3", n - 2 * d - k + 3, ok, pre,
                        notes="proof threshold is a Ramsey number; 7(k+2d)/2 is the improved bound")


def gbound_prop31(n: int, m: int, d: int, r: int) -> tuple[BoundsReport, BoundsReport]:
    """Tight form sqrt(2(m-(d-1)n+C(d,2))/r) and weak form sqrt(2m/r - 2dn/r)."""
    tight = Fraction(2 * (m - (d - 1) * n + comb(d, 2)), r)
    weak = Fraction(2 * m - 2 * d * n, r)
    reports = []
    for name, rad in (("prop31", tight), ("prop31weak", weak)):
        ok = rad >= 0
        reports.append(BoundsReport(
            name, None, ok, [f"radicand >= 0 ({rad}): {str(ok).lower()}"],
            radicand=rad if ok else Fraction(0),
        ))
    return reports[0], reports[1]


def recursion_threshold(d: int, r: int) -> int:
    """Smallest min degree for which color splitting works with r colors (r a power of 2, r >= 2)."""
    t = 4 * d - 3
    while r > 2:
        t = 4 * t - 3
        r //= 2
    return t


def split_degrees(d: int, r: int) -> list[int]:
    """Intermediate core degree used at each split, outermost first, ending with d."""
    out = []
    while r > 2:
        r //= 2
        out.append(recursion_threshold(d, r))
    out.append(d)
    return out


def is_power_of_two(r: int) -> bool:
    return r >= 1 and r & (r - 1) == 0


def lower_bound_recursive(n: int, k: int, d: int, r: int) -> BoundsReport:
    """Linear lower bound from recursively splitting the colors in halves.

    r = 2 is the two-color bound itself.  For r >= 4 the slopes of the
    two-color bound are multiplied through the levels; additive constants
    are dropped.
    """
    if not is_power_of_two(r) or r < 2:
        return BoundsReport("recursive", None, False, [f"r power of two >= 2 ({r}): false"])
    if r == 2:
        rep = lower_bound_thm1(n, k, d)
        return BoundsReport("recursive", rep.value, rep.applicable, rep.preconditions_checked)
    thr = recursion_threshold(d, r)
    pre = [f"r power of two ({r}): true", f"k >= {thr} ({k}): {str(k >= thr).lower()}"]
    if k < thr:
        return BoundsReport("recursive", None, False, pre)
    value = Fraction(n)
    outer = k
    for x in split_degrees(d, r):
        value *= thm1_slope(outer, x)
        outer = x
    return BoundsReport("recursive", value, True, pre, notes="additive constants dropped")


def all_bounds(n: int, k: int, d: int, r: int, m: int | None = None) -> list[BoundsReport]:
    rows = [
        lower_bound_thm1(n, k, d),
        upper_bound_thm2_slope(n, k, d, r),
        exact_thm3(n, k, d),
    ]
    if m is None:
        rows.append(BoundsReport("prop31", None, False, ["requires m"]))
    else:
        rows.extend(gbound_prop31(n, m, d, r))
    rows.append(lower_bound_recursive(n, k, d, r))
    return rows
