"""Structural analysis of hypersurfaces G = a(X)Y - F(X,Z,T).

Pipeline: domain check, normalization of F modulo a, per-irreducible-factor
root data (residue field and specialization), then the structural criteria
(unique factorization, plane fibration over k[x], regularity) and the
rectifiability verdict.  Reports carry citation tags: stable identifiers of
the decision rules used, so a consumer can see which equivalence produced a
verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .fields import Embedding, ExtensionField
from .polynomials import (
    MultiPoly,
    bivariate_irreducible,
    divmod_in_variable,
    ideal_contains_one,
    univariate_factor,
    univariate_gcd,
)
from .plane_coordinates import LINE, NOT_LINE, UNKNOWN_LINE, line_test, vartest

# citation tags used in reports
RULE_DOMAIN_GCD = "gcd"
RULE_DOMAIN_BASECHANGE = "rnew"
RULE_UFD = "ufd"
RULE_FIBRATION = "fib"
RULE_REGULARITY = "reg"
RULE_CHAR0 = "ch0"
RULE_NO_SIMPLE_ROOT = "chp2"
RULE_SEPARABLE_MULTIPLE = "chp3"
RULE_COORDINATES_GIVE_SYSTEM = "G"
RULE_FIBER_COORDINATES = "corG"
RULE_BASE_EXTENDS = "k[x]"
RULE_LINE_EQ_COORDINATE_CHAR0 = "ams"
RULE_SEPARABLE_DESCENT = "sepco"
RULE_LINEAR_FIBER = "linear"

VERDICT_RECTIFIABLE = "Rectifiable"
VERDICT_NOT_RECTIFIABLE = "NotRectifiable"
VERDICT_INCONCLUSIVE = "Inconclusive"

_XVARS = ("X", "Z", "T")


class HyperplaneError(Exception):
    pass


@dataclass
class Hyperplane:
    """The pair (a, F) defining a(X)Y - F(X,Z,T) over a base field.

    ``a`` is univariate in X of degree >= 1; ``F`` lives in the variables
    (X, Z, T).  ``original_F`` keeps the input polynomial: the regularity
    test differentiates the pre-normalization F with respect to X.
    """

    a: MultiPoly
    F: MultiPoly
    normalized: bool = False
    original_F: MultiPoly = None

    def __post_init__(self):
        if self.a.degree_in("X") < 1:
            raise HyperplaneError("a(X) must have degree at least 1 in X")
        for v in self.a.vars:
            if v != "X" and self.a.involves(v):
                raise HyperplaneError("a must be univariate in X")
        for v in self.F.vars:
            if v not in _XVARS and self.F.involves(v):
                raise HyperplaneError("F may involve only X, Z and T")
        if self.original_F is None:
            self.original_F = self.F

    @property
    def field(self):
        return self.F.field

    def defining_polynomial(self):
        vars4 = ("X", "Y", "Z", "T")
        Y = MultiPoly.variable(self.field, vars4, "Y")
        return self.a.with_vars(vars4) * Y - self.F.with_vars(vars4)


@dataclass
class RootDatum:
    """One irreducible factor p of a with its residue-field specialization."""

    factor: MultiPoly  # monic irreducible over the base field
    multiplicity: int
    residue_field: object
    specialization: MultiPoly  # F(lambda, Z, T) over residue_field, vars (Z,T)
    simple: bool  # multiplicity == 1
    separable: bool  # gcd(p, p') = 1

    @property
    def kbar_simple(self):
        """Simple as a root over the algebraic closure: multiplicity one and
        separable (equivalently a'(lambda) != 0)."""
        return self.simple and self.separable


@dataclass
class CoordinateOutcome:
    status: str  # "accept" | "reject" | "reject-accepts-over-extension"
    certificate: object = None
    reason: str = None


@dataclass
class AnalysisReport:
    domain: bool
    domain_witness: MultiPoly = None
    ufd: str = "unknown"  # "true" | "false" | "unknown"
    fibration: str = "unknown"
    regular: str = "unknown"
    roots: list = dataclass_field(default_factory=list)
    coordinates: list = dataclass_field(default_factory=list)
    lines: list = dataclass_field(default_factory=list)
    irreducibility: list = dataclass_field(default_factory=list)
    verdict: str = None
    failing_root: int = None
    inconclusive_reason: str = None
    theorem_path: list = dataclass_field(default_factory=list)
    hypotheses: dict = dataclass_field(default_factory=dict)
    implied: dict = dataclass_field(default_factory=dict)
    factor_complete: bool = True


# ---------------------------------------------------------------------------
# normalization and domain check
# ---------------------------------------------------------------------------


def normalize(h):
    """Replace F by its remainder under X-division by a.

    Rectifiability, domain-ness and every residue-field specialization are
    unchanged: the difference is a multiple of a, which vanishes at each root.
    """
    if h.normalized and h.F.degree_in("X") < h.a.degree_in("X"):
        return h
    a3 = h.a.with_vars(h.F.vars)
    _, r = divmod_in_variable(h.F, a3, "X")
    return Hyperplane(h.a, r, normalized=True, original_F=h.original_F)


def domain_check(h):
    """(is_domain, witness): the quotient is a domain iff gcd(a, F) = 1.

    The gcd lives in k[X]: it is the gcd of a with all X-coefficient
    polynomials of F, and deciding it over the base field settles it over the
    algebraic closure as well.
    """
    acc = h.a.with_vars(h.F.vars)
    g = acc
    fz = h.F.as_univariate("Z")
    coeffs = []
    for cz in fz:
        coeffs.extend(cz.as_univariate("T"))
    for c in coeffs:
        if c.is_zero():
            continue
        g = univariate_gcd(g, c, "X")
        if g.is_constant():
            return True, None
    if g.is_constant():
        return True, None
    return False, g


# ---------------------------------------------------------------------------
# root data
# ---------------------------------------------------------------------------


def root_data(h, rng=None):
    """One datum per irreducible factor of a; requires a normalized domain.

    Returns (data, complete): ``complete`` is False when the factorization of
    a over F_p(s) could not be finished; analysis then proceeds on the known
    factors only.
    """
    fact = univariate_factor(h.a, rng=rng)
    data = []
    field = h.field
    for p, mult in fact.factors:
        sep = _is_separable(p)
        if p.degree_in("X") == 1:
            dense = p.to_dense("X")
            lam = -dense[0]
            K = field
            spec = h.F.substitute({"X": lam})
        else:
            coeffs = p.to_dense("X")
            from .fields import extend

            K = extend(field, coeffs, _residue_generator_name(field))
            emb = Embedding(field, K)
            F_up = h.F.map_coefficients(emb, K)
            spec = F_up.substitute({"X": K.generator()})
        spec = _restrict_to_plane(spec)
        if spec.is_zero():
            raise HyperplaneError(
                "specialization vanished: the domain check must run first"
            )
        data.append(
            RootDatum(
                factor=p,
                multiplicity=mult,
                residue_field=K,
                specialization=spec,
                simple=(mult == 1),
                separable=sep,
            )
        )
    return data, fact.complete


def _is_separable(p):
    d = p.partial_derivative("X")
    if d.is_zero():
        return False
    g = univariate_gcd(p, d, "X")
    return g.is_constant()


def _residue_generator_name(field):
    if isinstance(field, ExtensionField):
        raise HyperplaneError("base field may not already be an extension")
    if field.characteristic() == 0:
        return "g"
    return "b"


def _restrict_to_plane(spec):
    return spec.with_vars(("Z", "T"))


# ---------------------------------------------------------------------------
# structural criteria
# ---------------------------------------------------------------------------


def coordinate_results(data):
    """Run the plane-coordinate test on every specialization."""
    out = []
    for rd in data:
        f = rd.specialization
        if f.is_constant():
            out.append(CoordinateOutcome("reject", reason="specialization is a unit"))
            continue
        r = vartest(f)
        if r.accepted:
            out.append(CoordinateOutcome("accept", certificate=r.certificate))
        elif r.accepted_over_extension:
            out.append(
                CoordinateOutcome(
                    "reject-accepts-over-extension",
                    certificate=r.extension_certificate,
                    reason=r.reason,
                )
            )
        else:
            out.append(CoordinateOutcome("reject", reason=r.reason))
    return out


def ufd_check(data, coord_results=None, degree_bound=None):
    """"true" iff every specialization is irreducible or a nonzero constant.

    A coordinate is irreducible, and irreducibility descends from any field
    extension, so both accept flavours of the coordinate test short-circuit
    the Kronecker machinery.
    """
    if coord_results is None:
        coord_results = coordinate_results(data)
    verdicts = []
    for rd, cr in zip(data, coord_results):
        f = rd.specialization
        if f.is_constant():
            verdicts.append("true")  # nonzero constant: a unit
            continue
        if cr.status in ("accept", "reject-accepts-over-extension"):
            verdicts.append("true")
            continue
        kwargs = {} if degree_bound is None else {"bound": degree_bound}
        res = bivariate_irreducible(f, "Z", "T", **kwargs)
        if res.is_irreducible:
            verdicts.append("true")
        elif res.is_reducible:
            verdicts.append("false")
        else:
            verdicts.append("unknown")
    if "false" in verdicts:
        return "false", verdicts
    if "unknown" in verdicts:
        return "unknown", verdicts
    return "true", verdicts


def fibration_check(data, coord_results=None):
    """"true" iff every specialization is a line in its residue plane."""
    lines = []
    for idx, rd in enumerate(data):
        f = rd.specialization
        if f.is_constant():
            lines.append(NOT_LINE)  # a unit is not a line
            continue
        if coord_results is not None and coord_results[idx].status == "accept":
            lines.append(LINE)
            continue
        lines.append(line_test(f))
    if NOT_LINE in lines:
        return "false", lines
    if UNKNOWN_LINE in lines:
        return "unknown", lines
    return "true", lines


def regularity_check(h, data):
    """Jacobian smoothness test, root by root.

    Simple roots over the closure need (f, f_Z, f_T) = (1); multiple or
    inseparable ones add the X-derivative of the original, pre-normalization
    F.  Returns ("true"/"false", per-root booleans).
    """
    FX = h.original_F.partial_derivative("X")
    per_root = []
    for rd in data:
        K = rd.residue_field
        f = rd.specialization
        gens = [f, f.partial_derivative("Z"), f.partial_derivative("T")]
        if not rd.kbar_simple:
            if K == h.field:
                dense = rd.factor.to_dense("X")
                lam = -dense[0]
                fx = FX.substitute({"X": lam})
            else:
                emb = Embedding(h.field, K)
                fx = FX.map_coefficients(emb, K).substitute({"X": K.generator()})
            gens.append(_restrict_to_plane(fx))
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            per_root.append(False)
            continue
        per_root.append(ideal_contains_one(gens))
    return ("true" if all(per_root) else "false"), per_root


# ---------------------------------------------------------------------------
# the verdict
# ---------------------------------------------------------------------------


def analyze(h, degree_bound=None, rng=None, verify_certificates=True):
    """Full analysis: domain, structure flags, coordinate data and verdict."""
    is_domain, witness = domain_check(h)
    if not is_domain:
        report = AnalysisReport(domain=False, domain_witness=witness)
        report.theorem_path = [RULE_DOMAIN_GCD, RULE_DOMAIN_BASECHANGE]
        return report

    hn = normalize(h)
    data, complete = root_data(hn, rng=rng)
    report = AnalysisReport(domain=True)
    report.factor_complete = complete
    report.roots = data
    report.theorem_path.extend([RULE_DOMAIN_GCD, RULE_DOMAIN_BASECHANGE])

    coords = coordinate_results(data)
    report.coordinates = coords
    report.ufd, report.irreducibility = ufd_check(
        data, coords, degree_bound=degree_bound
    )
    report.theorem_path.append(RULE_UFD)
    report.fibration, report.lines = fibration_check(data, coords)
    report.theorem_path.append(RULE_FIBRATION)
    if hn.field.characteristic() == 0:
        report.theorem_path.append(RULE_LINE_EQ_COORDINATE_CHAR0)
    report.regular, _ = regularity_check(hn, data)
    report.theorem_path.append(RULE_REGULARITY)

    if not complete:
        report.verdict = VERDICT_INCONCLUSIVE
        report.inconclusive_reason = (
            "the factorization of a(X) could not be completed over this field"
        )
        return report

    char = hn.field.characteristic()
    all_accept = all(c.status == "accept" for c in coords)
    if all_accept:
        if verify_certificates:
            _verify_all_certificates(data, coords)
        report.verdict = VERDICT_RECTIFIABLE
        report.theorem_path.extend(
            [
                RULE_COORDINATES_GIVE_SYSTEM,
                RULE_FIBER_COORDINATES,
                RULE_BASE_EXTENDS,
            ]
        )
        report.hypotheses["every_specialization_is_residue_coordinate"] = True
        report.implied = {
            "polynomial_ring_over_base": "true (implied)",
            "polynomial_ring_over_kx": "true (implied)",
            "makar_limanov_trivial": "true (implied)",
            "derksen_full": "true (implied)",
        }
        _assert_cross_consistency(report)
        return report

    # some specialization is not a coordinate of its residue plane
    failing = next(
        i for i, c in enumerate(coords) if c.status != "accept"
    )
    if char == 0:
        report.verdict = VERDICT_NOT_RECTIFIABLE
        report.failing_root = failing
        report.theorem_path.append(RULE_CHAR0)
        report.hypotheses["characteristic_zero"] = True
        report.hypotheses["some_specialization_not_coordinate"] = True
        _set_not_rectifiable_implications(report)
        return report

    no_simple_root = all(not rd.kbar_simple for rd in data)
    if no_simple_root:
        report.verdict = VERDICT_NOT_RECTIFIABLE
        report.failing_root = failing
        report.theorem_path.append(RULE_NO_SIMPLE_ROOT)
        report.hypotheses["no_simple_root_over_closure"] = True
        report.hypotheses["some_specialization_not_coordinate"] = True
        _set_not_rectifiable_implications(report)
        return report

    # the normalized presentation differs from the input by an ambient
    # substitution Y -> Y + q, so X-freeness may be read off after reduction
    f_free_of_x = not hn.F.involves("X")
    separable_multiple = any(
        rd.multiplicity > 1 and rd.separable for rd in data
    )
    if f_free_of_x and separable_multiple:
        base_f = _restrict_to_plane(hn.F)
        base_result = vartest(base_f)
        if not base_result.accepted:
            report.verdict = VERDICT_NOT_RECTIFIABLE
            report.failing_root = failing
            report.theorem_path.extend(
                [RULE_SEPARABLE_MULTIPLE, RULE_SEPARABLE_DESCENT]
            )
            report.hypotheses["F_free_of_X"] = True
            report.hypotheses["separable_multiple_root_exists"] = True
            report.hypotheses["base_field_test_rejects"] = True
            _set_not_rectifiable_implications(report)
            return report

    report.verdict = VERDICT_INCONCLUSIVE
    report.failing_root = failing
    report.inconclusive_reason = (
        "positive characteristic with a simple separable root: the known "
        "equivalences do not decide this configuration"
    )
    return report


def rectifiability_verdict(h, degree_bound=None, rng=None):
    """Alias for :func:`analyze`: the verdict with its full evidence record."""
    return analyze(h, degree_bound=degree_bound, rng=rng)


def _set_not_rectifiable_implications(report):
    report.implied = {
        "polynomial_ring_over_base": "false (implied)",
        "polynomial_ring_over_kx": "false (implied)",
        "coordinate_pair_with_x": "false (implied)",
    }


def _verify_all_certificates(data, coords):
    from .plane_coordinates import complement

    for rd, c in zip(data, coords):
        if c.status != "accept":
            continue
        complement(rd.specialization, c.certificate)


def _assert_cross_consistency(report):
    if report.verdict != VERDICT_RECTIFIABLE:
        return
    if report.fibration not in ("true",):
        raise HyperplaneError(
            "internal inconsistency: rectifiable but the fibration flag is "
            f"{report.fibration}"
        )
    if report.ufd not in ("true",):
        raise HyperplaneError(
            "internal inconsistency: rectifiable but the factoriality flag is "
            f"{report.ufd}"
        )
