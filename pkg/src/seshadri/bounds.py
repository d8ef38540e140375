"""Named lower and upper bounds for multi-point Seshadri constants.

Setting: a smooth projective surface with Picard number 1, L the ample
generator with self-intersection k = L^2, and r >= 2 very general points.
The optimal (upper-bound) value is sqrt(k/r).  The lower bounds gathered
here:

  main        3/2 when (r, k) = (2, 6); otherwise the generic value
              sqrt((r+2)/(r+3)) * sqrt(k/r), which holds unless some
              curve in |dL| through s <= r of the points with
              multiplicity one each computes the constant as d*k/s.
              Those exceptional candidates form an explicit finite list.
  szemberg    floor(sqrt(k/r)), valid for the ample generator.
  harbourne   the maximum of three explicit finite sets of rationals,
              valid for very ample L, with a supremum-only exceptional
              case when k <= r and r*k is a perfect square.
  biran       product bound: (single-point bound) * (plane value at r),
              conjectural unless both factors are proven.

All values are exact Surds; every comparison is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .exact import Rational, Surd, isqrt, render_decimal, surd_compare
from .pell import fsst_applicable, pell_fundamental, szemberg_single_point_bound

__all__ = [
    "BoundValue",
    "SubmaximalCandidate",
    "MainLowerBound",
    "HarbourneElement",
    "HarbourneBound",
    "PlaneValueStatus",
    "PlaneValue",
    "BoundEntry",
    "BoundReport",
    "ThresholdScan",
    "upper_bound",
    "generic_lower_value",
    "main_lower_bound",
    "enumerate_exceptional_candidates",
    "szemberg_floor_bound",
    "harbourne_bound",
    "biran_product_bound",
    "nagata_plane_value",
    "compare_bounds",
    "szemberg_dominance_threshold",
    "dominance_scan",
]


@dataclass(frozen=True)
class BoundValue:
    """An exact bound value with its qualifications.

    attained is False when the value is only a supremum (approached but
    not known to be a valid bound itself); conditional is True when the
    bound holds only modulo an enumerated list of exceptional cases.
    """

    value: Surd
    attained: bool = True
    conditional: bool = False


@dataclass(frozen=True)
class SubmaximalCandidate:
    """A potential exceptional curve class: C in |dL| through s points.

    The curve passes through s <= r very general points with multiplicity
    one each, needs s - 1 <= C^2 = d^2*k to exist, and would compute the
    constant as d*k/s, strictly below the generic bound.
    """

    d: int
    s: int
    value: Rational


@dataclass(frozen=True)
class MainLowerBound:
    """Main theorem bound plus its exceptional-candidate list."""

    bound: BoundValue
    candidates: tuple[SubmaximalCandidate, ...]
    annotation: Optional[str] = None

    @property
    def guaranteed(self) -> Surd:
        """The unconditional lower bound: min of the generic value and the
        smallest exceptional candidate (candidates are below the generic
        value by construction)."""
        if not self.candidates:
            return self.bound.value
        smallest = Surd(self.candidates[0].value)
        return min(self.bound.value, smallest)


@dataclass(frozen=True)
class HarbourneElement:
    """One member of the three-set maximum, with its defining fraction.

    num/den is the fraction exactly as the formula produces it (before
    reduction); source identifies the set:
      floor-multiple   floor(d*sqrt(r*k)) / (d*r)
      unit-reciprocal  1 / ceil(sqrt(r/k))
      ceil-multiple    d*k / ceil(d*sqrt(r*k))
    """

    value: Rational
    source: str
    d: Optional[int]
    num: int
    den: int

    def formula_text(self) -> str:
        return f"{self.num}/{self.den}"


@dataclass(frozen=True)
class HarbourneBound:
    bound: BoundValue
    winner: Optional[HarbourneElement]  # None in the exceptional case
    elements: tuple[HarbourneElement, ...]
    exceptional: bool
    advisory: bool  # True when very-ampleness was not asserted by the caller


class PlaneValueStatus(Enum):
    KNOWN = "known"
    PROVED_SQUARE = "proved-square"
    CONJECTURAL = "conjectural"


@dataclass(frozen=True)
class PlaneValue:
    """Multi-point constant of the plane with its epistemic status."""

    bound: BoundValue
    status: PlaneValueStatus
    note: Optional[str] = None


def upper_bound(k: int, r: int) -> BoundValue:
    """The optimal value sqrt(k/r); an upper bound, attained only in
    optimal cases."""
    if k < 1 or r < 1:
        raise ValueError(f"need k, r >= 1, got k={k}, r={r}")
    return BoundValue(Surd.sqrt(Fraction(k, r)), attained=False)


def generic_lower_value(k: int, r: int) -> Surd:
    """sqrt((r+2)/(r+3)) * sqrt(k/r) as a canonical Surd."""
    if k < 1 or r < 2:
        raise ValueError(f"need k >= 1 and r >= 2, got k={k}, r={r}")
    return Surd.sqrt(Fraction((r + 2) * k, (r + 3) * r))


TWO_SIX_ANNOTATION = (
    "equality case: a curve in the ample class through the two points "
    "with multiplicity two at each"
)


def enumerate_exceptional_candidates(k: int, r: int) -> tuple[SubmaximalCandidate, ...]:
    """All (d, s) whose curve value d*k/s lies below the generic bound.

    Membership: d >= 1, 1 <= s <= r, s - 1 <= d^2*k, and d*k/s strictly
    below sqrt((r+2)k/((r+3)r)) under exact comparison.  The list is
    finite: d*k/s >= d*k/r grows with d, so the loop stops at the first d
    for which even s = r cannot go below the bound.  Sorted ascending by
    value, ties by (d, s).
    """
    if r < 2:
        raise ValueError(f"multi-point candidates need r >= 2, got {r}")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    generic_sq = Fraction((r + 2) * k, (r + 3) * r)
    out = []
    d = 1
    while Fraction(d * k, r) ** 2 < generic_sq:
        d2k = d * d * k
        for s in range(1, r + 1):
            if s - 1 <= d2k and Fraction(d * k, s) ** 2 < generic_sq:
                out.append(SubmaximalCandidate(d, s, Fraction(d * k, s)))
        d += 1
    out.sort(key=lambda c: (c.value, c.d, c.s))
    return tuple(out)


def main_lower_bound(k: int, r: int) -> MainLowerBound:
    """The main multi-point lower bound at (k, r).

    (r, k) = (2, 6) is special: the bound is exactly 3/2, unconditional,
    weaker than the generic formula value sqrt(12/5).  Otherwise the
    generic value is returned flagged conditional, together with the
    complete finite list of exceptional candidates; callers that need a
    single unconditional number take .guaranteed.
    """
    if r < 2:
        raise ValueError("multi-point bound needs r >= 2; single-point bounds live in pell")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if (r, k) == (2, 6):
        return MainLowerBound(
            bound=BoundValue(Surd(Fraction(3, 2)), attained=True, conditional=False),
            candidates=(),
            annotation=TWO_SIX_ANNOTATION,
        )
    candidates = enumerate_exceptional_candidates(k, r)
    return MainLowerBound(
        bound=BoundValue(generic_lower_value(k, r), attained=True, conditional=True),
        candidates=candidates,
    )


def szemberg_floor_bound(k: int, r: int) -> int:
    """floor(sqrt(k/r)): the largest integer j with j^2 * r <= k."""
    if k < 1 or r < 1:
        raise ValueError(f"need k, r >= 1, got k={k}, r={r}")
    return isqrt(k // r)


def _ceil_sqrt_ratio(num: int, den: int) -> int:
    """Smallest integer c with c^2 * den >= num (i.e. ceil(sqrt(num/den)))."""
    t = isqrt(num // den)
    return t if t * t * den == num else t + 1


def harbourne_bound(k: int, r: int, very_ample: bool) -> HarbourneBound:
    """Maximum of the three explicit sets bounding the constant below.

    Sets (d ranges over 1 <= d <= sqrt(r/k), empty when k > r):
      { floor(d*sqrt(r*k)) / (d*r) },  { 1/ceil(sqrt(r/k)) },
      { d*k / ceil(d*sqrt(r*k)) }.

    Exceptional case k <= r with r*k a perfect square: the maximum equals
    sqrt(k/r) and the true statement is only that every value strictly
    below sqrt(k/r) is a bound, so the value is returned with
    attained=False.  The bound needs L very ample; when the caller does
    not assert that, the result is marked advisory.
    """
    if k < 1 or r < 1:
        raise ValueError(f"need k, r >= 1, got k={k}, r={r}")
    elements = []
    d = 1
    while d * d * k <= r:  # d <= sqrt(r/k)
        rk = d * d * r * k
        fl = isqrt(rk)
        elements.append(
            HarbourneElement(Fraction(fl, d * r), "floor-multiple", d, fl, d * r)
        )
        ce = fl if fl * fl == rk else fl + 1
        elements.append(
            HarbourneElement(Fraction(d * k, ce), "ceil-multiple", d, d * k, ce)
        )
        d += 1
    c = _ceil_sqrt_ratio(r, k)
    elements.append(HarbourneElement(Fraction(1, c), "unit-reciprocal", None, 1, c))

    exceptional = k <= r and _is_perfect_square(r * k)
    if exceptional:
        value = BoundValue(Surd.sqrt(Fraction(k, r)), attained=False)
        winner = None
    else:
        best = max(
            elements, key=lambda e: (e.value, e.source, -(e.d or 0))
        )
        value = BoundValue(Surd(best.value), attained=True)
        winner = best
    return HarbourneBound(
        bound=value,
        winner=winner,
        elements=tuple(elements),
        exceptional=exceptional,
        advisory=not very_ample,
    )


def _is_perfect_square(n: int) -> bool:
    t = isqrt(n)
    return t * t == n


def biran_product_bound(eps_single: Surd | Rational, eps_plane_r: Surd | Rational) -> Surd:
    """Exact product of a single-point bound and a plane multi-point value."""
    a = eps_single if isinstance(eps_single, Surd) else Surd(Fraction(eps_single))
    b = eps_plane_r if isinstance(eps_plane_r, Surd) else Surd(Fraction(eps_plane_r))
    return a * b


# Exact plane values for few points; 1/sqrt(r) takes over from r = 9 on
# (proved on perfect squares, conjectural otherwise).
_PLANE_SMALL: dict[int, Fraction] = {
    1: Fraction(1),
    2: Fraction(1, 2),
    3: Fraction(1, 2),
    4: Fraction(1, 2),
    5: Fraction(2, 5),
    6: Fraction(2, 5),
    7: Fraction(3, 8),
    8: Fraction(6, 17),
}

_NINE_POINT_NOTE = (
    "value is 1/3 = 1/sqrt(9); comparison tables occasionally misprint it as 3"
)


def nagata_plane_value(r: int) -> PlaneValue:
    """Multi-point constant of the plane with unit line class.

    r <= 8: known exact values.  r >= 9: 1/sqrt(r), proved when r is a
    perfect square and conjectural otherwise.
    """
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    if r <= 8:
        return PlaneValue(BoundValue(Surd(_PLANE_SMALL[r])), PlaneValueStatus.KNOWN)
    value = Surd.sqrt(Fraction(1, r))
    if _is_perfect_square(r):
        note = _NINE_POINT_NOTE if r == 9 else None
        return PlaneValue(BoundValue(value), PlaneValueStatus.PROVED_SQUARE, note)
    return PlaneValue(BoundValue(value), PlaneValueStatus.CONJECTURAL)


@dataclass(frozen=True)
class BoundEntry:
    """One named bound inside a comparison report."""

    name: str
    value: BoundValue
    applicability: str
    attribution: str
    conjectural: bool = False
    notes: tuple[str, ...] = ()
    candidates: tuple[SubmaximalCandidate, ...] = ()


@dataclass(frozen=True)
class BoundReport:
    """All applicable bounds at (k, r), entries sorted by decreasing value.

    Exact ties share a rank (ranks[i] is the 1-based rank of entries[i]).
    Every unconditional entry value is <= upper.value, exactly; entries
    flagged conditional carry their exceptional candidates.
    """

    k: int
    r: int
    upper: BoundValue
    entries: tuple[BoundEntry, ...]
    ranks: tuple[int, ...]
    notes: tuple[str, ...] = ()


def _decimal(value: Surd, digits: int = 4) -> str:
    return render_decimal(value, digits)


def compare_bounds(k: int, r: int, very_ample: bool = False) -> BoundReport:
    """Assemble and exactly order all applicable bounds at (k, r).

    Included: the main bound (with candidates), the floor bound, the
    very-ample set maximum (only when very_ample is asserted), and the
    product bound when a Pell single-point bound exists (k >= 2, not a
    square).  The product is marked conjectural unless k has the verified
    form n^2 +- 1 and the plane factor is proven.
    """
    if r < 2:
        raise ValueError(f"bound comparison needs r >= 2, got {r}")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    upper = upper_bound(k, r)
    notes: list[str] = []
    entries: list[BoundEntry] = []

    main = main_lower_bound(k, r)
    main_notes: list[str] = []
    if main.annotation:
        main_notes.append(main.annotation)
    if main.candidates:
        listed = ", ".join(
            f"d={c.d}, s={c.s}: {c.value} ({_decimal(Surd(c.value))})"
            for c in main.candidates
        )
        main_notes.append(f"exceptional candidates: {listed}")
        main_notes.append(
            f"unconditional guarantee: {main.guaranteed} ({_decimal(main.guaranteed)})"
        )
    entries.append(
        BoundEntry(
            name="main",
            value=main.bound,
            applicability="ample generator, Picard number 1, r >= 2",
            attribution="generic value sqrt((r+2)/(r+3))*sqrt(k/r), or 3/2 at (r,k)=(2,6)",
            notes=tuple(main_notes),
            candidates=main.candidates,
        )
    )

    floor_val = szemberg_floor_bound(k, r)
    entries.append(
        BoundEntry(
            name="szemberg-floor",
            value=BoundValue(Surd(Fraction(floor_val))),
            applicability="ample generator, Picard number 1",
            attribution="Szemberg's floor bound floor(sqrt(k/r))",
        )
    )

    if very_ample:
        harb = harbourne_bound(k, r, very_ample=True)
        harb_notes = [
            "set elements: "
            + ", ".join(
                f"{e.formula_text()} ({_decimal(Surd(e.value))}, {e.source}"
                + (f", d={e.d})" if e.d is not None else ")")
                for e in harb.elements
            )
        ]
        if harb.exceptional:
            harb_notes.append(
                "exceptional case (k <= r and r*k a perfect square): sqrt(k/r) is a "
                "supremum only; every value strictly below it is a valid bound"
            )
        else:
            by_source = {}
            for e in harb.elements:
                cur = by_source.get(e.source)
                if cur is None or e.value > cur.value:
                    by_source[e.source] = e
            floor_best = by_source.get("floor-multiple")
            ceil_best = by_source.get("ceil-multiple")
            if floor_best and ceil_best and floor_best.value != ceil_best.value:
                a, b = floor_best, ceil_best
                hi, lo = (a, b) if a.value > b.value else (b, a)
                harb_notes.append(
                    f"set maximum {hi.formula_text()} ({_decimal(Surd(hi.value))}) "
                    f"comes from the {hi.source} element; the {lo.source} element "
                    f"{lo.formula_text()} ({_decimal(Surd(lo.value))}) is strictly smaller"
                )
        entries.append(
            BoundEntry(
                name="harbourne",
                value=harb.bound,
                applicability="very ample L (asserted by caller)",
                attribution="Harbourne's three-set maximum for very ample line bundles",
                notes=tuple(harb_notes),
            )
        )

    if k >= 2 and not _is_perfect_square(k):
        single = szemberg_single_point_bound(k)
        sol = pell_fundamental(k)
        plane = nagata_plane_value(r)
        witness = fsst_applicable(k)
        conjectural = (not witness.applicable) or plane.status is PlaneValueStatus.CONJECTURAL
        biran_notes = [
            f"single-point factor {single} from Pell solution (p0, q0) = ({sol.p0}, {sol.q0})",
            f"plane factor {plane.bound.value} at r = {r} ({plane.status.value})",
        ]
        if witness.applicable:
            biran_notes.append(
                f"single-point bound proven: k = {k} = {witness.n}^2"
                + ("-1" if witness.form == "n^2-1" else "+1")
            )
        else:
            biran_notes.append(
                f"single-point bound conjectural: k = {k} is not of the form n^2 +- 1"
            )
        if plane.note:
            biran_notes.append(plane.note)
        entries.append(
            BoundEntry(
                name="biran-product",
                value=BoundValue(biran_product_bound(single, plane.bound.value)),
                applicability="product of single-point and plane multi-point bounds",
                attribution="Biran-type product bound",
                conjectural=conjectural,
                notes=tuple(biran_notes),
            )
        )
    elif k >= 2:
        notes.append(f"no Pell single-point bound: k = {k} is a perfect square")

    # Unconditional, non-supremum entries can never exceed the optimal value.
    for e in entries:
        if not e.value.conditional:
            assert surd_compare(e.value.value, upper.value) <= 0, e

    entries.sort(key=lambda e: (-e.value.value.squared(), e.name))
    ranks: list[int] = []
    for i, e in enumerate(entries):
        if i > 0 and surd_compare(e.value.value, entries[i - 1].value.value) == 0:
            ranks.append(ranks[-1])
        else:
            ranks.append(i + 1)
    return BoundReport(
        k=k,
        r=r,
        upper=upper,
        entries=tuple(entries),
        ranks=tuple(ranks),
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class ThresholdScan:
    """Result of the floor-vs-generic dominance scan for fixed r."""

    r: int
    k_cap: int
    threshold: Optional[int]  # minimal N <= k_cap dominating through k_cap
    last_failure: Optional[int]
    band_cutoff: int  # every k >= band_cutoff provably dominates
    stable_beyond_cap: bool  # k_cap window covers all possible failures


def _floor_dominates(k: int, r: int) -> bool:
    """floor(sqrt(k/r)) >= sqrt((r+2)k/((r+3)r)), exactly (ties dominate:
    at k/r a perfect square the floor equals the optimal value)."""
    j = isqrt(k // r)
    return j * j * (r + 3) * r >= (r + 2) * k


def dominance_scan(r: int, k_cap: int) -> ThresholdScan:
    """Scan k = 1..k_cap for floor-bound dominance and certify the tail.

    The tail certificate: a failure at k needs j = floor(sqrt(k/r)) with
    j^2 r (r+3) < (r+2) k, and k <= r (j+1)^2 + r - 1 always, so failures
    are impossible once j^2 r (r+3) >= (r+2)(r (j+1)^2 + r - 1).  With j*
    the smallest such j, every k >= r * j*^2 dominates; when k_cap reaches
    that cutoff, the scanned window contains every failure there is.
    """
    if r < 2:
        raise ValueError(f"dominance scan needs r >= 2, got {r}")
    if k_cap < 1:
        raise ValueError(f"need k_cap >= 1, got {k_cap}")
    last_failure = None
    for k in range(1, k_cap + 1):
        if not _floor_dominates(k, r):
            last_failure = k

    # As a quadratic in j the certificate margin opens upward, is negative
    # at j = 0, and has its vertex at j = r + 2, so the first nonnegative j
    # lies past the vertex and the margin stays nonnegative from there on.
    j = 0
    while j * j * r * (r + 3) < (r + 2) * (r * (j + 1) ** 2 + r - 1):
        j += 1
    band_cutoff = r * j * j
    stable = k_cap + 1 >= band_cutoff

    if last_failure is None:
        threshold: Optional[int] = 1
    elif last_failure == k_cap:
        threshold = None
    else:
        threshold = last_failure + 1
    return ThresholdScan(r, k_cap, threshold, last_failure, band_cutoff, stable)


def szemberg_dominance_threshold(r: int, k_cap: int) -> Optional[int]:
    """Minimal N <= k_cap such that the floor bound dominates the generic
    bound for every k with N <= k <= k_cap; None when k_cap itself fails."""
    return dominance_scan(r, k_cap).threshold
