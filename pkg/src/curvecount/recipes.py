"""Curve-counting pipelines on Calabi-Yau threefolds and the bookkeeping
for degenerate families.

The two computational recipes express an incidence condition as a bundle on
a moduli space of linear subspaces and integrate its top Chern class:

* lines on a complete intersection in P^N live on G(2, N+1), with the
  condition bundle the sum of Sym^d of the dual tautological sub-bundle;
* conics in P^4 live on the projectivization of Sym^2(S*) over G(3, 5),
  with the condition bundle the quotient of Sym^d(S*) by the conic's ideal
  in each degree.

When the bundle rank fails to match the moduli dimension the recipe reports
the dimension of the expected family instead of a count.  The remaining
entry points are the exact bookkeeping rules for families and degenerations:
normal-bundle splitting types on a rational curve, family equivalences, the
1/m^3 multiple-cover weight, and validation of degeneration ledgers whose
component equivalences must add up to the conserved total.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .chern import (
    ChernVector,
    GrassRing,
    direct_sum,
    sym_power,
    tensor_line,
    whitney_quotient,
)
from .projbundle import ProjBundleRing, pb_integrate
from .schubert import GrassCtx


@dataclass(frozen=True)
class CountReport:
    """Outcome of a counting recipe.

    Exactly one of count / family_dimension is set: a count requires the
    condition bundle rank to equal the moduli dimension.
    """

    recipe: str
    ambient_dim: int
    degrees: tuple
    moduli_dim: int
    bundle_rank: int
    count: int | None
    family_dimension: int | None
    calabi_yau: bool

    def __post_init__(self):
        balanced = self.bundle_rank == self.moduli_dim
        if balanced and (self.count is None or self.family_dimension is not None):
            raise ValueError("balanced recipe must carry a count and no family dimension")
        if not balanced and (self.count is not None or self.family_dimension is None):
            raise ValueError("unbalanced recipe must carry a family dimension and no count")

    @property
    def ambient(self) -> str:
        degs = ",".join(str(d) for d in self.degrees)
        return f"degree ({degs}) in P^{self.ambient_dim}"

    def describe(self) -> str:
        lines = [
            f"recipe:        {self.recipe}",
            f"ambient:       {self.ambient}",
            f"moduli dim:    {self.moduli_dim}",
            f"bundle rank:   {self.bundle_rank}",
            f"calabi-yau:    {'yes' if self.calabi_yau else 'no'}",
        ]
        if self.count is not None:
            lines.append(f"count:         {self.count}")
        else:
            lines.append(f"family dim:    {self.family_dimension}")
        return "\n".join(lines)


@lru_cache(maxsize=None)
def _lines_impl(ambient_dim: int, degrees: tuple) -> CountReport:
    ctx = GrassCtx(2, ambient_dim + 1)
    ring = GrassRing(ctx)
    sub_dual = ring.tautological("sub_dual")
    bundle = direct_sum(*(sym_power(sub_dual, d) for d in degrees))
    rank = bundle.rank
    dim = ctx.dim
    calabi_yau = sum(degrees) == ambient_dim + 1
    if rank == dim:
        count = ring.integrate(bundle.classes[rank - 1])
        return CountReport("lines", ambient_dim, degrees, dim, rank, count, None, calabi_yau)
    return CountReport("lines", ambient_dim, degrees, dim, rank, None, dim - rank, calabi_yau)


def lines_on_complete_intersection(ambient_dim: int, degrees) -> CountReport:
    """Lines on a generic complete intersection of the given degrees in P^N.

    The moduli space is G(2, N+1) of dimension 2(N-1); a degree-d equation
    cuts the rank d+1 bundle Sym^d(S*).  When the total rank matches the
    dimension the count is the integral of the top Chern class; otherwise
    lines form a family of the reported dimension.  The calabi_yau flag
    records whether the degrees sum to N+1.
    """
    if not isinstance(ambient_dim, int) or ambient_dim < 3:
        raise ValueError(f"ambient projective dimension must be an integer >= 3, got {ambient_dim}")
    degrees = tuple(int(d) for d in degrees)
    if not degrees or any(d < 1 for d in degrees):
        raise ValueError(f"hypersurface degrees must be positive integers, got {degrees}")
    return _lines_impl(ambient_dim, degrees)


@lru_cache(maxsize=None)
def _conics_impl(degree: int) -> CountReport:
    ctx = GrassCtx(3, 5)
    ring = GrassRing(ctx)
    sub_dual = ring.tautological("sub_dual")
    conic_moduli = ProjBundleRing(sym_power(sub_dual, 2))
    total_dim = conic_moduli.top_degree

    quintic_forms = conic_moduli.pullback(sym_power(sub_dual, degree))
    ideal_part = tensor_line(
        conic_moduli.pullback(sym_power(sub_dual, degree - 2)),
        -conic_moduli.zeta(1),
    )
    bundle = whitney_quotient(quintic_forms, ideal_part)

    # Whitney consistency through the whole ring, not just the quotient rank
    top = conic_moduli.top_degree
    from .chern import _series_mul

    lhs = _series_mul(ideal_part.total_series(top), bundle.total_series(top), conic_moduli, top)
    if lhs != quintic_forms.total_series(top):
        raise ArithmeticError("quotient bundle fails the Whitney identity")

    rank = bundle.rank
    calabi_yau = degree == 5
    if rank == total_dim:
        count = pb_integrate(bundle.classes[rank - 1])
        return CountReport("conics", 4, (degree,), total_dim, rank, count, None, calabi_yau)
    return CountReport("conics", 4, (degree,), total_dim, rank, None, total_dim - rank, calabi_yau)


def conics_on_quintic_type(degree: int) -> CountReport:
    """Conics on a generic degree-d hypersurface in P^4.

    A conic spans a plane, so the moduli space is the P^5-bundle of conics
    in the varying plane: the projectivization of Sym^2(S*) over G(3, 5),
    of dimension 11.  Containment in a degree-d hypersurface is cut by the
    rank 2d+1 quotient of Sym^d(S*) by Sym^(d-2)(S*) twisted by the conic's
    equation line.  d = 5 balances rank and dimension and yields the count;
    other degrees report the family dimension 11 - (2d+1).
    """
    if not isinstance(degree, int) or degree < 2:
        raise ValueError(f"hypersurface degree must be an integer >= 2, got {degree}")
    return _conics_impl(degree)


@dataclass(frozen=True)
class ClemensCount:
    """Dimension bookkeeping for degree-d rational curves on a quintic.

    A degree-d map from P^1 to P^4 has 5(d+1) coefficients; lying on the
    quintic imposes 5d+1 conditions and reparametrization absorbs 4, so the
    excess is zero in every degree and rational curves are expected in
    finite number.
    """

    degree: int
    parameters: int
    conditions: int
    reparametrizations: int

    @property
    def excess(self) -> int:
        return self.parameters - self.conditions - self.reparametrizations


def clemens_excess(degree: int) -> ClemensCount:
    """Parameter/condition count for degree-d rational curves on a quintic
    threefold: (5(d+1), 5d+1, 4), excess 0."""
    if not isinstance(degree, int) or degree < 1:
        raise ValueError(f"curve degree must be a positive integer, got {degree}")
    return ClemensCount(degree, 5 * (degree + 1), 5 * degree + 1, 4)


@dataclass(frozen=True)
class NormalBundleSplit:
    """Splitting type O(a) + O(b) of the normal bundle of a rational curve
    on a Calabi-Yau threefold, with a + b = -2."""

    a: int
    b: int
    h0: int
    classification: str


def normal_bundle_classify(a: int) -> NormalBundleSplit:
    """Classify a rational curve by the splitting type O(a) + O(-2-a).

    h^0 counts first-order deformations: h^0(O(a)) = max(a+1, 0) summed
    over both summands.  Zero sections means the curve is rigid (that needs
    a = b = -1), one means first-order deformations only, more means the
    curve moves in a family of that dimension.
    """
    if not isinstance(a, int):
        raise ValueError("splitting degree must be an integer")
    b = -2 - a
    h0 = max(a + 1, 0) + max(b + 1, 0)
    if h0 == 0:
        kind = "rigid"
    elif h0 == 1:
        kind = "first_order"
    else:
        kind = "higher_dim"
    return NormalBundleSplit(a, b, h0, kind)


def equivalence_zero_dim(curve_classes, moduli_segre, integrate_top) -> int:
    """Contribution of a zero-dimensional piece of a family to a count.

    curve_classes and moduli_segre are graded class sequences on the piece,
    indexed by codimension and truncated at its dimension; the result is
    the integral of the dimension-zero part of their product.  The classes
    may be plain integers (multiples of a fixed cycle in each degree) or
    ring elements; integrate_top maps a top-degree class to an integer.
    Only one connected piece is handled here; a disconnected family is
    processed piece by piece and the results added.
    """
    curve_classes = list(curve_classes)
    moduli_segre = list(moduli_segre)
    dim = max(len(curve_classes), len(moduli_segre)) - 1
    if dim < 0:
        raise ValueError("class sequences must be nonempty")
    top = None
    for i in range(dim + 1):
        j = dim - i
        if i < len(curve_classes) and j < len(moduli_segre):
            term = curve_classes[i] * moduli_segre[j]
            top = term if top is None else top + term
    if top is None:
        raise ValueError("no terms of top dimension")
    return integrate_top(top)


def equivalence_unobstructed(family_dim: int, chern_integrals=None) -> int:
    """Count contributed by an unobstructed k-dimensional family of curves.

    The contribution is the Euler number of the rank-k obstruction sheaf
    over the family.  A zero-dimensional family contributes exactly 1.  For
    k >= 1 the caller supplies integrals of the obstruction Chern classes,
    indexed so that chern_integrals[k] is the integral of c_k; a mapping
    from index to integer also works.
    """
    if not isinstance(family_dim, int) or family_dim < 0:
        raise ValueError(f"family dimension must be a nonnegative integer, got {family_dim}")
    if family_dim == 0:
        return 1
    if chern_integrals is None:
        raise ValueError(f"need the integral of c_{family_dim} for a {family_dim}-dimensional family")
    try:
        value = chern_integrals[family_dim]
    except (KeyError, IndexError):
        raise ValueError(f"missing integral of c_{family_dim}") from None
    return int(value)


def multiple_cover_weight(cover_degree: int) -> Fraction:
    """Weight of degree-m multiple covers of a rigid rational curve: each
    cover contributes 1/m^3, exactly."""
    if not isinstance(cover_degree, int) or cover_degree < 1:
        raise ValueError(f"cover degree must be a positive integer, got {cover_degree}")
    return Fraction(1, cover_degree**3)


@dataclass(frozen=True)
class LedgerComponent:
    """One boundary component: its label, its equivalence (contribution per
    member), and how many members it has (default 1)."""

    label: str
    equivalence: int
    count: int = 1

    @property
    def contribution(self) -> int:
        return self.equivalence * self.count


@dataclass(frozen=True)
class DegenerationLedger:
    """A conserved total and the components it is supposed to split into
    when the variety degenerates."""

    name: str
    total: int
    components: tuple

    @property
    def computed(self) -> int:
        return sum(c.contribution for c in self.components)


@dataclass(frozen=True)
class LedgerReport:
    """Result of checking one ledger; a failure is data, not an error."""

    name: str
    total: int
    computed: int
    ok: bool

    @property
    def residual(self) -> int:
        return self.total - self.computed


def ledger_check(ledger: DegenerationLedger) -> LedgerReport:
    """Verify that the component contributions add up to the total."""
    computed = ledger.computed
    return LedgerReport(ledger.name, ledger.total, computed, computed == ledger.total)


def _parse_ledger(obj, origin: str) -> DegenerationLedger:
    if not isinstance(obj, dict):
        raise ValueError(f"{origin}: ledger entries must be objects")
    for key in ("name", "total", "components"):
        if key not in obj:
            raise ValueError(f"{origin}: ledger is missing key '{key}'")
    name = obj["name"]
    total = obj["total"]
    raw = obj["components"]
    if not isinstance(name, str) or not isinstance(total, int) or not isinstance(raw, list):
        raise ValueError(f"{origin}: ledger needs a string name, integer total and component list")
    comps = []
    for i, c in enumerate(raw):
        where = f"{origin}: component {i}"
        if not isinstance(c, dict) or "label" not in c or "equivalence" not in c:
            raise ValueError(f"{where} needs label and equivalence")
        count = c.get("count", 1)
        if not isinstance(c["equivalence"], int) or not isinstance(count, int):
            raise ValueError(f"{where} must use integer equivalence and count")
        comps.append(LedgerComponent(str(c["label"]), c["equivalence"], count))
    return DegenerationLedger(name, total, tuple(comps))


def _load_data():
    with resources.files("curvecount.data").joinpath("degenerations.json").open("r") as fh:
        return json.load(fh)


def builtin_ledgers() -> dict:
    """The shipped degeneration ledgers, keyed by name."""
    data = _load_data()
    out = {}
    for obj in data["ledgers"]:
        ledger = _parse_ledger(obj, "builtin data")
        out[ledger.name] = ledger
    return out


def reference_counts() -> dict:
    """Shipped reference values that are recorded, never recomputed."""
    data = _load_data()
    return {rec["name"]: {"value": rec["value"], "note": rec["note"]} for rec in data["reference_counts"]}


def load_ledger_file(path) -> list:
    """Parse a ledger file: {"version": 1, "ledgers": [...]}.

    Unknown top-level keys are ignored so the builtin data format loads too.
    """
    with open(path, "r") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(data, dict) or "ledgers" not in data:
        raise ValueError(f"{path}: expected an object with a 'ledgers' list")
    if not isinstance(data["ledgers"], list):
        raise ValueError(f"{path}: 'ledgers' must be a list")
    return [_parse_ledger(obj, f"{path} ledger {i}") for i, obj in enumerate(data["ledgers"])]
