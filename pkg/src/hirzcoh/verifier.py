"""Certified replay: a nonsplit extension on F_2 that is almost nef but
not pseudo-effective.

On X = F_2 write C for the (-2)-section, F for a fiber and H = C + 3F,
an ample class.  The extension group Ext^1(O, O(C)) = H^1(O(C)) is
one-dimensional, so up to scale there is a unique nonsplit extension

    0 -> O(C) -> E -> O -> 0.

Restricting to C keeps the sequence nonsplit and forces E|_C = O(-1)^2,
while on every fiber the extension group vanishes and E|_F = O + O(1):
the bundle is nef along the ruling and fails nefness exactly on C.

The certificates below reduce "E is not pseudo-effective" (and the same
for its Frobenius/symmetric-power twists) to exact integer checks.  Each
one restricts a symmetric-power twist of E to C, where all summands share
one degree that is an affine form in the parameters (b, l); negativity of
that form on the whole region b >= 1, l >= 0 certifies h^0 = 0 for every
parameter value at once.  Sweep mode replays the same h^0 computations
numerically on a finite grid.  Deliberately corrupted inputs (the split
direct sum, an inflated twist) must make the affected certificate FAIL;
the test suite checks that they do.

Every record is a pure computation; the orchestrator merges them in a
fixed claim order, so concurrent evaluation would be deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Union

from . import cohomology
from .hirzebruch import C, F, ZERO, DivisorClass, SurfaceContext, format_class
from .p1 import (
    AmbiguousExtensionError,
    DegreeForm,
    SplittingType,
    classify_extension,
    format_splitting,
)

PASS = "PASS"
FAIL = "FAIL"

#: The ample polarization used throughout the replay.
H = DivisorClass(1, 3)

#: The two region parameters as degree forms.
BETA = DegreeForm(cb=1)
ELL = DegreeForm(cl=1)

_SETUP_IDS = ("extension", "restriction")
_CLAIM_IDS = ("claim3", "claim4", "sigma", "charp", "remark_t", "almost_nef")
_RECORD_ORDER = _SETUP_IDS + _CLAIM_IDS


class SymbolicUnsupported(ValueError):
    """The restriction is not balanced, so one degree form cannot carry it."""


# --------------------------------------------------------------------------
# extension datum and bundle expressions
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtensionDatum:
    """A rank-2 extension of O(quot) by O(sub), plus its Ext-group size.

    ``ext_dim`` is dim Ext^1(O(quot), O(sub)) = h^1(O(sub - quot)) on the
    surface; ``nonsplit`` records whether a nonzero class was taken.
    """

    sub: DivisorClass
    quot: DivisorClass
    nonsplit: bool
    ext_dim: int

    def __post_init__(self) -> None:
        if self.nonsplit and self.ext_dim < 1:
            raise ValueError("a nonsplit extension needs ext_dim >= 1")


@dataclass(frozen=True)
class ExtBundle:
    """Expression leaf: the extension bundle itself."""

    datum: ExtensionDatum


@dataclass(frozen=True)
class Sym:
    """Symmetric power; the exponent may be parametric in b."""

    inner: "BundleExpr"
    power: Union[int, DegreeForm]


@dataclass(frozen=True)
class Twist:
    """Tensor by O(a*C + b*F); both coefficients may be parametric."""

    inner: "BundleExpr"
    a: Union[int, DegreeForm] = 0
    b: Union[int, DegreeForm] = 0

    def __post_init__(self) -> None:
        if isinstance(self.a, int):
            object.__setattr__(self, "a", DegreeForm.constant(self.a))
        if isinstance(self.b, int):
            object.__setattr__(self, "b", DegreeForm.constant(self.b))


@dataclass(frozen=True)
class Frob:
    """Pullback by the q-power Frobenius (q a prime power >= 2)."""

    inner: "BundleExpr"
    q: int


BundleExpr = Union[ExtBundle, Sym, Twist, Frob]


@dataclass(frozen=True)
class BalancedRestriction:
    """Symbolic restriction: every summand shares ``degree``; rank as text."""

    degree: DegreeForm
    rank: Union[int, str]

    @property
    def rank_text(self) -> str:
        return str(self.rank)


def _curve_class(curve: str) -> DivisorClass:
    if curve == "C":
        return C
    if curve == "fiber":
        return F
    raise ValueError(f"unknown curve {curve!r}; expected 'C' or 'fiber'")


def restricted_twist_degree(
    ctx: SurfaceContext, a_form: DegreeForm, b_form: DegreeForm, curve: str
) -> DegreeForm:
    """Degree form of O(a*C + b*F) restricted to the curve."""
    if curve == "C":
        return a_form.scale(-ctx.e) + b_form
    _curve_class(curve)  # validate
    return a_form


def _leaf_restriction(ctx: SurfaceContext, datum: ExtensionDatum, curve: str) -> SplittingType:
    # The nonsplit flag transfers to the restriction to C on the strength
    # of the restriction certificate (injectivity of extension classes);
    # on a fiber the extension group vanishes and classify forces a split.
    cl = _curve_class(curve)
    return classify_extension(
        ctx.intersect(datum.sub, cl), ctx.intersect(datum.quot, cl), datum.nonsplit
    )


def _restrict_numeric(
    ctx: SurfaceContext, expr: BundleExpr, curve: str, beta: int, ell: int
) -> SplittingType:
    if isinstance(expr, ExtBundle):
        return _leaf_restriction(ctx, expr.datum, curve)
    if isinstance(expr, Sym):
        m = expr.power(beta, ell) if isinstance(expr.power, DegreeForm) else expr.power
        return _restrict_numeric(ctx, expr.inner, curve, beta, ell).sym_power(m)
    if isinstance(expr, Twist):
        shift = restricted_twist_degree(ctx, expr.a, expr.b, curve)(beta, ell)
        return _restrict_numeric(ctx, expr.inner, curve, beta, ell).twist(shift)
    if isinstance(expr, Frob):
        return _restrict_numeric(ctx, expr.inner, curve, beta, ell).frobenius_pullback(
            expr.q
        )
    raise TypeError(f"not a bundle expression: {expr!r}")


def _restrict_symbolic(
    ctx: SurfaceContext, expr: BundleExpr, curve: str
) -> BalancedRestriction:
    if isinstance(expr, ExtBundle):
        st = _leaf_restriction(ctx, expr.datum, curve)
        if st.is_zero() or not st.is_balanced():
            raise SymbolicUnsupported(
                f"restriction {format_splitting(st)} is not balanced; "
                "symbolic mode unsupported; use a numeric sweep"
            )
        deg, rank = st.pairs[0]
        return BalancedRestriction(DegreeForm.constant(deg), rank)
    if isinstance(expr, Sym):
        inner = _restrict_symbolic(ctx, expr.inner, curve)
        if isinstance(expr.power, int):
            degree = inner.degree.scale(expr.power)
            if isinstance(inner.rank, int):
                rank: Union[int, str] = comb(inner.rank + expr.power - 1, expr.power)
            else:
                rank = f"C({inner.rank} + {expr.power} - 1, {expr.power})"
        else:
            try:
                degree = inner.degree.times(expr.power)
            except ValueError as exc:
                raise SymbolicUnsupported(str(exc)) from None
            m_text = expr.power.compact()
            if isinstance(inner.rank, int):
                rank = f"C({m_text} + {inner.rank - 1}, {inner.rank - 1})"
            else:
                rank = f"C({m_text} + {inner.rank} - 1, {inner.rank})"
        return BalancedRestriction(degree, rank)
    if isinstance(expr, Twist):
        inner = _restrict_symbolic(ctx, expr.inner, curve)
        shift = restricted_twist_degree(ctx, expr.a, expr.b, curve)
        return BalancedRestriction(inner.degree + shift, inner.rank)
    if isinstance(expr, Frob):
        inner = _restrict_symbolic(ctx, expr.inner, curve)
        return BalancedRestriction(inner.degree.scale(expr.q), inner.rank)
    raise TypeError(f"not a bundle expression: {expr!r}")


def restrict_expr(
    ctx: SurfaceContext,
    expr: BundleExpr,
    curve: str,
    beta: int | None = None,
    ell: int = 0,
):
    """Restrict a bundle expression to C or to a fiber.

    With concrete ``beta`` (and ``ell``) the result is a SplittingType;
    without, the symbolic route returns a BalancedRestriction and raises
    SymbolicUnsupported whenever some stage is not balanced.
    """
    _curve_class(curve)
    if beta is None:
        return _restrict_symbolic(ctx, expr, curve)
    return _restrict_numeric(ctx, expr, curve, beta, ell)


# --------------------------------------------------------------------------
# claim records
# --------------------------------------------------------------------------


@dataclass
class ClaimRecord:
    """One certified statement: what was checked, how, and the outcome."""

    claim_id: str
    title: str
    mode: str  # "symbolic" | "sweep" | "exact"
    status: str
    headline: str = ""
    degree_form: DegreeForm | None = None
    details: dict = field(default_factory=dict)
    witness: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json_dict(self) -> dict:
        form = None
        if self.degree_form is not None:
            form = {
                "c0": self.degree_form.c0,
                "cb": self.degree_form.cb,
                "cl": self.degree_form.cl,
                "text": str(self.degree_form),
            }
        return {
            "id": self.claim_id,
            "title": self.title,
            "mode": self.mode,
            "status": self.status,
            "headline": self.headline,
            "degree_form": form,
            "details": self.details,
            "witness": self.witness,
        }


def _check_mode(mode: str, beta_max: int | None) -> None:
    if mode not in ("symbolic", "sweep"):
        raise ValueError(f"mode must be 'symbolic' or 'sweep', got {mode!r}")
    if mode == "sweep" and (beta_max is None or beta_max < 1):
        raise ValueError("sweep mode needs beta_max >= 1")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# --------------------------------------------------------------------------
# construction certificates
# --------------------------------------------------------------------------


def build_extension(ctx: SurfaceContext) -> ExtensionDatum:
    """The nonsplit extension of O by O(C), when one exists.

    The group Ext^1(O, O(C)) = H^1(O(C)) has dimension e - 1 (pushforward
    degrees {0, -e}), so e >= 2 is exactly the range with a nonzero class
    to choose.
    """
    ext_dim = cohomology.h1(ctx, C)
    if ext_dim == 0:
        raise ValueError(
            f"no nonsplit extension exists on F_{ctx.e}: "
            "Ext^1(O, O(C)) = H^1(O(C)) = 0"
        )
    return ExtensionDatum(sub=C, quot=ZERO, nonsplit=True, ext_dim=ext_dim)


def split_control_datum(ctx: SurfaceContext) -> ExtensionDatum:
    """The split direct sum O(C) + O: the negative control."""
    return ExtensionDatum(
        sub=C, quot=ZERO, nonsplit=False, ext_dim=cohomology.h1(ctx, C)
    )


def _extension_record(ctx: SurfaceContext, datum: ExtensionDatum) -> ClaimRecord:
    return ClaimRecord(
        claim_id="extension",
        title="nonsplit extension of O by O(C)",
        mode="exact",
        status=PASS,
        headline=(
            f"0 -> O(C) -> E -> O -> 0 with dim Ext^1(O, O(C)) = {datum.ext_dim}; "
            f"nonsplit class chosen"
        ),
        details={
            "sub": format_class(datum.sub),
            "quot": format_class(datum.quot),
            "ext_group": "Ext^1(O, O(C)) = H^1(O(C))",
            "ext_dim": datum.ext_dim,
            "nonsplit": datum.nonsplit,
        },
    )


def nonsplit_restriction_certificate(
    ctx: SurfaceContext, datum: ExtensionDatum
) -> ClaimRecord:
    """Certifies that the extension stays nonsplit when restricted to C.

    Premises: h^1(O_X) = 0 makes restriction of extension classes to C
    injective, and h^1 of O_C(C) on C is nonzero so the restricted class
    lands in a group that can hold it.  The record also carries both
    restriction types; on a fiber the extension group vanishes, so the
    restricted sequence splits no matter what.
    """
    h1_structure = cohomology.h1(ctx, ZERO)
    gap_on_c = ctx.intersect(datum.sub - datum.quot, C)  # -e for the replay datum
    target_h1 = SplittingType((gap_on_c,)).h1()
    details: dict = {
        "h1_structure_sheaf": h1_structure,
        "restriction_of_ext_classes": "injective iff h^1(O_X) = 0",
        "O_C_of_C_degree": gap_on_c,
        "h1_O_C_of_C": target_h1,
    }
    try:
        res_c = _leaf_restriction(ctx, datum, "C")
        res_f = _leaf_restriction(ctx, datum, "fiber")
    except AmbiguousExtensionError as exc:
        return ClaimRecord(
            claim_id="restriction",
            title="restriction of the extension to C and to a fiber",
            mode="exact",
            status=FAIL,
            headline=f"restriction type undetermined: {exc}",
            details=details,
            witness={"error": str(exc)},
        )
    details["E_restricted_to_C"] = format_splitting(res_c)
    details["E_restricted_to_fiber"] = format_splitting(res_f)
    ok = h1_structure == 0 and (not datum.nonsplit or target_h1 >= 1)
    kind = "nonsplit" if datum.nonsplit else "split (control)"
    return ClaimRecord(
        claim_id="restriction",
        title="restriction of the extension to C and to a fiber",
        mode="exact",
        status=PASS if ok else FAIL,
        headline=(
            f"E|_C = {format_splitting(res_c)} ({kind}), "
            f"E|_fiber = {format_splitting(res_f)} (splits); "
            f"premises h^1(O_X) = {h1_structure}, h^1(O_C(C)) = {target_h1}"
        ),
        details=details,
        witness=None
        if ok
        else {"h1_structure_sheaf": h1_structure, "h1_O_C_of_C": target_h1},
    )


# --------------------------------------------------------------------------
# vanishing machinery shared by the h^0 = 0 certificates
# --------------------------------------------------------------------------


def _sweep_vanishing(
    ctx: SurfaceContext, expr: BundleExpr, beta_max: int
) -> tuple[int, dict | None]:
    """Check h^0 = 0 over 1 <= b <= beta_max, 0 <= l <= 5b; first failure wins."""
    evaluations = 0
    for beta in range(1, beta_max + 1):
        for ell in range(0, 5 * beta + 1):
            st = _restrict_numeric(ctx, expr, "C", beta, ell)
            evaluations += 1
            value = st.h0()
            if value:
                return evaluations, {"beta": beta, "ell": ell, "h0": value}
    return evaluations, None


def _vanishing_certificate(
    ctx: SurfaceContext,
    claim_id: str,
    title: str,
    expr: BundleExpr,
    mode: str,
    beta_max: int | None,
    details: dict,
    conclusion_pass: str,
) -> ClaimRecord:
    """Certify h^0(C, expr|_C) = 0 over the region, symbolically or by sweep."""
    _check_mode(mode, beta_max)
    degree_form: DegreeForm | None = None
    rank_text = None
    try:
        balanced = _restrict_symbolic(ctx, expr, "C")
        degree_form = balanced.degree
        rank_text = balanced.rank_text
    except SymbolicUnsupported:
        if mode == "symbolic":
            raise
    if rank_text is not None:
        details["rank"] = rank_text
    details["region"] = "b >= 1, l >= 0"

    if mode == "symbolic":
        assert degree_form is not None
        if degree_form.is_negative_on_region():
            headline = f"restricted degrees {degree_form.compact()} < 0 on the region; {conclusion_pass}"
            return ClaimRecord(
                claim_id, title, mode, PASS, headline, degree_form, details
            )
        beta, ell = degree_form.nonnegative_witness()
        value = _restrict_numeric(ctx, expr, "C", beta, ell).h0()
        witness = {
            "beta": beta,
            "ell": ell,
            "degree": degree_form(beta, ell),
            "h0": value,
        }
        headline = (
            f"degree form {degree_form.compact()} is not negative on the region: "
            f"value {degree_form(beta, ell)} at (b, l) = ({beta}, {ell}), h^0 = {value}"
        )
        return ClaimRecord(
            claim_id, title, mode, FAIL, headline, degree_form, details, witness
        )

    evaluations, witness = _sweep_vanishing(ctx, expr, beta_max)
    details["beta_max"] = beta_max
    details["ell_range"] = "0..5b"
    details["evaluations"] = evaluations
    if witness is None:
        headline = (
            f"h^0 = 0 at all {evaluations} grid points with 1 <= b <= {beta_max}, "
            f"0 <= l <= 5b; {conclusion_pass}"
        )
        return ClaimRecord(claim_id, title, mode, PASS, headline, degree_form, details)
    headline = (
        f"h^0 = {witness['h0']} > 0 at (b, l) = ({witness['beta']}, {witness['ell']})"
    )
    return ClaimRecord(
        claim_id, title, mode, FAIL, headline, degree_form, details, witness
    )


def _base_row_identity(
    ctx: SurfaceContext, fiber_multiple: int, betas: range
) -> tuple[bool, dict]:
    """Check h^0(O(m*b*F)) = m*b + 1 = h^0 on P^1, via both surface routes.

    Sections of a bundle pulled back from the base restrict bijectively to
    C because C is a section of the ruling; the dimension identity is the
    checkable shadow of that bijection.
    """
    checked = []
    ok = True
    for beta in betas:
        cls = DivisorClass(0, fiber_multiple * beta)
        lhs = cohomology.h0(ctx, cls)
        rhs = SplittingType((fiber_multiple * beta,)).h0()
        agree = lhs == rhs == fiber_multiple * beta + 1
        if abs(cls.b) <= cohomology.BRUTE_FORCE_BOUND:
            agree = agree and cohomology.brute_force_h0(ctx, cls) == lhs
        ok = ok and agree
        checked.append(beta)
    info = {
        "identity": f"h0(O({fiber_multiple}b F)) = {fiber_multiple}b + 1 = h0 on P^1",
        "reason": (
            "C is a section of the ruling, so sections pulled back from the "
            "base restrict bijectively to C"
        ),
        "checked_betas": checked,
        "holds": ok,
    }
    return ok, info


# --------------------------------------------------------------------------
# the named certificates
# --------------------------------------------------------------------------


def _char0_tower(datum: ExtensionDatum) -> BundleExpr:
    """S^{4b}(S^4 E): the characteristic-zero symmetric-power tower."""
    return Sym(Sym(ExtBundle(datum), 4), BETA.scale(4))


def peeling_vanishing_certificate(
    ctx: SurfaceContext,
    datum: ExtensionDatum | None = None,
    mode: str = "symbolic",
    beta_max: int | None = None,
) -> ClaimRecord:
    """Claim id "claim3": sections of every peeled column vanish on C.

    For each l >= 0 the restriction to C of S^{4b}(S^4 E)(l*C + 15b*F) is
    a sum of line bundles of one common degree -b - 2l < 0, so it has no
    sections.  Peeling the 5b copies of C off the polarization twist one
    at a time (the twist identity 5H = 5C + 15F makes 5b*H = 5b*C + 15b*F)
    then identifies H^0 at the 15b*F twist with H^0 at the 5b*H twist.
    """
    if datum is None:
        datum = build_extension(ctx)
    expr = Twist(_char0_tower(datum), a=ELL, b=BETA.scale(15))
    identity_holds = 5 * H == 5 * C + 15 * F
    details = {
        "bundle": "S^{4b}(S^4 E)(lC + 15bF) restricted to C",
        "polarization_identity": "5H = 5C + 15F",
        "polarization_identity_holds": identity_holds,
        "peeling": "l = 1..5b: vanishing on C makes each column inclusion bijective on H^0",
    }
    record = _vanishing_certificate(
        ctx,
        "claim3",
        "vanishing on C of the peeled symmetric-power columns",
        expr,
        mode,
        beta_max,
        details,
        "every column inclusion is bijective on H^0",
    )
    if not identity_holds:  # divisor arithmetic is checked, not assumed
        record.status = FAIL
        record.headline = "polarization identity 5H = 5C + 15F failed"
        record.witness = {"error": "polarization identity failed"}
    return record


def base_row_certificate(
    ctx: SurfaceContext,
    datum: ExtensionDatum | None = None,
    mode: str = "symbolic",
    beta_max: int | None = None,
    fiber_multiple: int = 15,
) -> ClaimRecord:
    """Claim id "claim4": the map onto the base-pulled-back twist kills H^0.

    Two ingredients: (i) the restriction to C of S^{4b}(S^4 E)(m*b*F)
    (m = 15) has common degree (m - 16)b < 0, so its sections vanish on C;
    (ii) sections of O(m*b*F) restrict bijectively to C.  A global section
    of the big bundle therefore restricts to zero on C, and the bijection
    forces its image section of O(m*b*F) to be zero.

    ``fiber_multiple`` exists for the falsifiability control: m = 16 makes
    the degree form vanish identically and the certificate must FAIL.
    """
    _check_mode(mode, beta_max)
    if datum is None:
        datum = build_extension(ctx)
    expr = Twist(_char0_tower(datum), a=0, b=BETA.scale(fiber_multiple))
    betas = range(1, (beta_max or 8) + 1)
    row_ok, row_info = _base_row_identity(ctx, fiber_multiple, betas)
    details = {
        "bundle": f"S^{{4b}}(S^4 E)({fiber_multiple}bF) restricted to C",
        "base_row": row_info,
    }
    record = _vanishing_certificate(
        ctx,
        "claim4",
        "zero map on global sections into the base-pulled-back twist",
        expr,
        mode,
        beta_max,
        details,
        "H^0 into O({m}bF) is the zero map".replace("{m}", str(fiber_multiple)),
    )
    if not row_ok:
        record.status = FAIL
        record.witness = record.witness or {"error": "base-row identity failed"}
        record.headline += "; base-row identity FAILED"
    elif record.passed:
        record.headline += (
            f"; base row h^0(O({fiber_multiple}bF)) = {fiber_multiple}b + 1 "
            "restricts bijectively to C"
        )
    return record


def quotient_zero_conclusion(
    ctx: SurfaceContext,
    peeling: ClaimRecord,
    base_row: ClaimRecord,
    mode: str = "symbolic",
    beta_max: int | None = None,
) -> ClaimRecord:
    """Claim id "sigma": the quotient surjection is zero on global sections.

    Gate: the peeling and base-row certificates must both PASS.  Then every
    global section of S^{4b}(S^4 E)(5b*H) comes from the 15b*F twist
    (peeling) and dies in O(15b*F) (base row), so the induced map to
    H^0(O(5b*H)) is zero.  A sheaf all of whose global maps to a quotient
    line bundle vanish cannot be generically globally generated, and this
    failure at the single exponent alpha = 4 (for every b) already refutes
    pseudo-effectivity of S^4(E)(H), which demands generic global
    generation for every alpha at some b.
    """
    _check_mode(mode, beta_max)
    gate = peeling.passed and base_row.passed
    details: dict = {
        "gate": {"claim3": peeling.status, "claim4": base_row.status},
        "surjection": "S^{4b}(S^4 E)(5bH) ->> O(5bH), induced by E ->> O",
    }
    if not gate:
        return ClaimRecord(
            claim_id="sigma",
            title="zero map on global sections of the quotient surjection",
            mode=mode,
            status=FAIL,
            headline="no conclusion emitted: a premise certificate failed",
            details=details,
            witness={"gate": details["gate"]},
        )
    quantifier = (
        "all b >= 1"
        if mode == "symbolic"
        else f"1 <= b <= {beta_max} (finite evidence)"
    )
    details["quantifier"] = quantifier
    details["ggg_argument"] = (
        "if all global maps to the quotient line bundle vanish, "
        "the evaluation map cannot be generically surjective"
    )
    details["alpha_quantifier"] = (
        "pseudo-effectivity requires, for every alpha, some b with "
        "S^{alpha b}(.)(bH) generically globally generated; alpha = 4 fails "
        "for every b, which refutes it"
    )
    details["bridge"] = (
        "not verified here: S^4 of the headline ample-by-big extension bundle "
        "is the pullback of S^4(E)(H) along a finite cover that trivializes "
        "the polarization twist; pseudo-effectivity would descend along that "
        "cover, so this certificate refutes it upstream too"
    )
    return ClaimRecord(
        claim_id="sigma",
        title="zero map on global sections of the quotient surjection",
        mode=mode,
        status=PASS,
        headline=(
            f"H^0(S^{{4b}}(S^4 E)(5bH) ->> O(5bH)) = 0 for {quantifier}; "
            "S^4(E)(H) is not pseudo-effective"
        ),
        details=details,
    )


def frobenius_certificate(
    ctx: SurfaceContext,
    p: int,
    datum: ExtensionDatum | None = None,
    mode: str = "symbolic",
    beta_max: int | None = None,
) -> ClaimRecord:
    """Claim id "charp": the positive-characteristic route via Frobenius.

    The exponent rule is k = 1 for p >= 5 and k = 2 for p < 5, so the
    degree multiplier q = p^k is always >= 4.  Twisting the Frobenius
    pullback of the extension by H gives an extension of the ample O(H) by
    the big O(qC + H); the vanishing analogous to the peeling certificate
    has common restricted degree (15 - 4q)b - 2l, with boundary value
    15 - 4q <= -1 attained exactly at q = 4.
    """
    if not _is_prime(p):
        raise ValueError(f"characteristic must be prime, got {p}")
    _check_mode(mode, beta_max)
    if datum is None:
        datum = build_extension(ctx)
    k = 1 if p >= 5 else 2
    q = p**k
    expr = Twist(Sym(Frob(ExtBundle(datum), q), BETA.scale(4)), a=ELL, b=BETA.scale(15))
    boundary = 15 - 4 * q
    sub_twisted = q * C + H
    quot_twisted = H
    identity_holds = 5 * H == 5 * C + 15 * F
    betas = range(1, (beta_max or 8) + 1)
    row_ok, row_info = _base_row_identity(ctx, 15, betas)
    details = {
        "p": p,
        "frobenius_exponent": k,
        "degree_multiplier": q,
        "boundary_value": boundary,
        "boundary_bound": -1,
        "boundary_attained": boundary == -1,
        "polarization_identity": "5H = 5C + 15F",
        "polarization_identity_holds": identity_holds,
        "twisted_extension": (
            f"0 -> O({format_class(sub_twisted)}) -> (F^{k}* E)(H) -> "
            f"O({format_class(quot_twisted)}) -> 0"
        ),
        "sub_is_big": ctx.is_big(sub_twisted),
        "quot_is_ample": ctx.is_ample(quot_twisted),
        "base_row": row_info,
    }
    record = _vanishing_certificate(
        ctx,
        "charp",
        f"Frobenius-pullback vanishing in characteristic {p}",
        expr,
        mode,
        beta_max,
        details,
        f"(F^{k}* E)(H) is not pseudo-effective",
    )
    if record.passed and not (row_ok and boundary <= -1 and identity_holds):
        record.status = FAIL
        record.witness = {"boundary_value": boundary, "base_row_holds": row_ok}
        record.headline = "boundary, bookkeeping or base-row premise failed"
    elif record.passed:
        record.headline = (
            f"p = {p}: exponent {k}, multiplier q = {q}; "
            f"degrees {record.degree_form.compact()} < 0 on the region "
            f"(boundary 15 - 4q = {boundary}); (F^{k}* E)(H) is not pseudo-effective"
        )
    return record


def direct_not_psef_certificate(
    ctx: SurfaceContext,
    datum: ExtensionDatum | None = None,
    mode: str = "symbolic",
    beta_max: int | None = None,
) -> ClaimRecord:
    """Claim id "remark_t": E itself is not pseudo-effective.

    Same mechanism one level down: S^{4b}(E)(b*H) surjects onto O(b*H),
    the restriction to C of S^{4b}(E)(l*C + 3b*F) has common degree
    -b - 2l < 0 (twist identity H = C + 3F), and sections of O(3b*F)
    restrict bijectively to C.
    """
    _check_mode(mode, beta_max)
    if datum is None:
        datum = build_extension(ctx)
    expr = Twist(Sym(ExtBundle(datum), BETA.scale(4)), a=ELL, b=BETA.scale(3))
    identity_holds = H == C + 3 * F
    betas = range(1, (beta_max or 8) + 1)
    row_ok, row_info = _base_row_identity(ctx, 3, betas)
    details = {
        "bundle": "S^{4b}(E)(lC + 3bF) restricted to C",
        "surjection": "S^{4b}(E)(bH) ->> O(bH), induced by E ->> O",
        "polarization_identity": "H = C + 3F",
        "polarization_identity_holds": identity_holds,
        "base_row": row_info,
    }
    record = _vanishing_certificate(
        ctx,
        "remark_t",
        "E itself is not pseudo-effective",
        expr,
        mode,
        beta_max,
        details,
        "E itself is not pseudo-effective",
    )
    if record.passed and not (identity_holds and row_ok):
        record.status = FAIL
        record.witness = {
            "polarization_identity_holds": identity_holds,
            "base_row_holds": row_ok,
        }
        record.headline = "twist bookkeeping or base-row premise failed"
    return record


def almost_nef_evidence(
    ctx: SurfaceContext, datum: ExtensionDatum | None = None
) -> ClaimRecord:
    """Claim id "almost_nef": nef along the ruling, not nef exactly on C.

    Restriction to every fiber is O + O(1) (the extension group on a fiber
    vanishes, so the restricted sequence splits), which is nef; the
    restriction to C is O(-1)^2, which is not.  That exhibits C as the
    candidate exceptional locus.  This is evidence for almost nefness, not
    a proof: no other curves are controlled here.
    """
    if datum is None:
        datum = build_extension(ctx)
    try:
        fiber_type = _leaf_restriction(ctx, datum, "fiber")
        c_type = _leaf_restriction(ctx, datum, "C")
    except AmbiguousExtensionError as exc:
        return ClaimRecord(
            claim_id="almost_nef",
            title="nefness evidence by restriction",
            mode="exact",
            status=FAIL,
            headline=f"restriction type undetermined: {exc}",
            witness={"error": str(exc)},
        )
    split_on_c = classify_extension(
        ctx.intersect(datum.sub, C), ctx.intersect(datum.quot, C), False
    )
    rows = [
        {"curve": "fiber", "type": format_splitting(fiber_type), "nef": fiber_type.is_nef()},
        {"curve": "C", "type": format_splitting(c_type), "nef": c_type.is_nef()},
        {
            "curve": "C (split control)",
            "type": format_splitting(split_on_c),
            "nef": split_on_c.is_nef(),
        },
    ]
    ok = fiber_type.is_nef() and not c_type.is_nef()
    return ClaimRecord(
        claim_id="almost_nef",
        title="nefness evidence by restriction",
        mode="exact",
        status=PASS if ok else FAIL,
        headline=(
            f"E|_fiber = {format_splitting(fiber_type)} nef, "
            f"E|_C = {format_splitting(c_type)} not nef; C is the exceptional "
            "curve (evidence, not proof)"
        ),
        details={
            "restrictions": rows,
            "label": "evidence, not proof",
            "exceptional_locus": "C",
            "caveat": (
                "almost nefness asks for nefness outside a countable family "
                "of subvarieties; only fibers and C are checked here, and "
                "stability of almost nefness under extension is not reproved"
            ),
        },
        witness=None if ok else {"restrictions": rows},
    )


# --------------------------------------------------------------------------
# the orchestrator
# --------------------------------------------------------------------------


@dataclass
class VerificationReport:
    """All records of one replay, merged in canonical claim order."""

    e: int
    characteristic: int
    mode: str
    beta_max: int | None
    records: list[ClaimRecord]
    overall: str
    conclusion: str
    notes: list[str]

    def record(self, claim_id: str) -> ClaimRecord | None:
        for rec in self.records:
            if rec.claim_id == claim_id:
                return rec
        return None

    def claims(self) -> list[ClaimRecord]:
        return [r for r in self.records if r.claim_id in _CLAIM_IDS]

    def vanishing_claim_count(self) -> int:
        """Claims that certify an H^0 statement (everything but the evidence)."""
        return sum(1 for r in self.claims() if r.claim_id != "almost_nef")

    def first_failure(self) -> ClaimRecord | None:
        for rec in self.records:
            if not rec.passed:
                return rec
        return None

    def to_json_dict(self) -> dict:
        setup = {
            r.claim_id: r.to_json_dict() for r in self.records if r.claim_id in _SETUP_IDS
        }
        claims = {
            r.claim_id: r.to_json_dict() for r in self.records if r.claim_id in _CLAIM_IDS
        }
        return {
            "schema": 1,
            "surface": {
                "e": self.e,
                "intersection": {"C.C": -self.e, "C.F": 1, "F.F": 0},
                "canonical_class": format_class(DivisorClass(-2, -(self.e + 2))),
                "polarization": format_class(H),
            },
            "characteristic": self.characteristic,
            "mode": self.mode,
            "beta_max": self.beta_max,
            "region": {"b": ">= 1", "l": ">= 0"},
            "setup": setup,
            "claims": claims,
            "overall": self.overall,
            "conclusion": self.conclusion,
            "notes": self.notes,
        }


def _assemble(
    ctx: SurfaceContext,
    characteristic: int,
    mode: str,
    beta_max: int | None,
    records: list[ClaimRecord],
    notes: list[str],
) -> VerificationReport:
    order = {cid: i for i, cid in enumerate(_RECORD_ORDER)}
    records = sorted(records, key=lambda r: order.get(r.claim_id, len(order)))
    overall = PASS if records and all(r.passed for r in records) else FAIL
    conclusion = "not pseudo-effective" if overall == PASS else "not certified"
    return VerificationReport(
        e=ctx.e,
        characteristic=characteristic,
        mode=mode,
        beta_max=beta_max,
        records=records,
        overall=overall,
        conclusion=conclusion,
        notes=notes,
    )


def run_full_replay(
    ctx: SurfaceContext,
    characteristic: int = 0,
    mode: str = "symbolic",
    beta_max: int | None = None,
) -> VerificationReport:
    """Compose every certificate for the chosen characteristic.

    Overall status is PASS exactly when every constituent record passes;
    the conclusion line is "not pseudo-effective" only in that case.  A
    failed premise stops the dependent certificates, so the first failure
    is the report's witness.
    """
    _check_mode(mode, beta_max)
    if characteristic != 0 and not _is_prime(characteristic):
        raise ValueError(
            f"characteristic must be 0 or a prime, got {characteristic}"
        )
    notes: list[str] = []
    records: list[ClaimRecord] = []
    try:
        datum = build_extension(ctx)
    except ValueError as exc:
        records.append(
            ClaimRecord(
                claim_id="extension",
                title="nonsplit extension of O by O(C)",
                mode="exact",
                status=FAIL,
                headline=str(exc),
                witness={"error": str(exc)},
            )
        )
        return _assemble(ctx, characteristic, mode, beta_max, records, notes)
    records.append(_extension_record(ctx, datum))
    restriction = nonsplit_restriction_certificate(ctx, datum)
    records.append(restriction)
    if restriction.passed:
        if characteristic == 0:
            peeling = peeling_vanishing_certificate(ctx, datum, mode, beta_max)
            base_row = base_row_certificate(ctx, datum, mode, beta_max)
            records.extend(
                [
                    peeling,
                    base_row,
                    quotient_zero_conclusion(ctx, peeling, base_row, mode, beta_max),
                ]
            )
        else:
            records.append(
                frobenius_certificate(ctx, characteristic, datum, mode, beta_max)
            )
            notes.append(
                "characteristic > 0: whether pseudo-effectivity of E passes to "
                "its symmetric powers is unknown, so the conclusion for the "
                "twisted bundle goes through the Frobenius pullback instead"
            )
        records.append(direct_not_psef_certificate(ctx, datum, mode, beta_max))
        records.append(almost_nef_evidence(ctx, datum))
    return _assemble(ctx, characteristic, mode, beta_max, records, notes)
