"""
Identity verifiers keyed by tag.

Each verifier runs one formula on an instance, compares it with the oracle
inverse of the combined element, re-checks the p-Drazin axioms on the formula
output and returns a VerificationReport. Hypothesis violations propagate as
HypothesisError; everything else measurable ends up in the report.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from ..algebra import (
    AlgebraElement,
    add,
    identity,
    mul,
    norm,
    power,
    relative_difference,
    scale,
    sub,
)
from ..drazin import (
    DEFAULT_POLICY,
    PDrazinResult,
    SeriesPolicy,
    check_pdrazin_axioms,
    commutation_residual,
    pdrazin,
)
from ..errors import StructuralError
from ..identities import (
    LambdaPair,
    SpecialCase,
    add_commuting,
    add_commuting_trace,
    add_orthogonal,
    add_orthogonal_n,
    gate,
    group_residual,
    invertibility_residual,
    lambda_power_identities,
    lambda_swap_relations,
    nilpotency_residual,
    one_plus_from_sum,
    orthogonality_residual,
    product_commuting,
    product_lambda,
    radical_membership_residual,
    scaled_power_residual,
    specialize_2_8_trace,
    sub_lambda,
    sub_lambda_finite,
)
from ..identities import hypotheses
from ..instances.models import InstanceFile
from ..reports import FORMULA, IDENTITY, VerificationReport
from ..tolerances import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger(__name__)

Verifier = Callable[[InstanceFile, Tolerances, SeriesPolicy], VerificationReport]

# Exponents checked when an instance does not fix `n`
DEFAULT_POWERS = {"thm2.3": (1, 2, 3, 4, 5), "lambda": (1, 2, 3, 4)}


@dataclass(frozen=True)
class IdentityInfo:
    """A registered identity.

    Attributes:
        tag: Lowercase tag used on the command line (e.g. "thm2.7")
        title: One-line statement of what is verified
        elements: Element names the instance must supply ("a1".. for n-ary tags)
        needs_lambda: True for the λ-commuting family
        verifier: Function producing the report
    """

    tag: str
    title: str
    elements: Tuple[str, ...]
    needs_lambda: bool
    verifier: Verifier


IDENTITIES: Dict[str, IdentityInfo] = {}


def register(
    tag: str,
    title: str,
    elements: Tuple[str, ...] = ("a", "b"),
    needs_lambda: bool = False,
) -> Callable[[Verifier], Verifier]:
    def decorator(func: Verifier) -> Verifier:
        IDENTITIES[tag] = IdentityInfo(tag, title, elements, needs_lambda, func)
        return func

    return decorator


def get_identity(tag: str) -> IdentityInfo:
    try:
        return IDENTITIES[tag.strip().lower()]
    except KeyError:
        raise StructuralError(
            f"Unknown identity '{tag}'; known: {', '.join(IDENTITIES)}"
        ) from None


def verify(
    instance: InstanceFile,
    tag: str,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    policy: SeriesPolicy = DEFAULT_POLICY,
) -> VerificationReport:
    """Run the verifier for `tag` on `instance`.

    Tolerance and policy overrides stored in the instance take precedence over
    the given base values.

    Raises:
        StructuralError: Unknown tag
        InstanceFileError: The instance lacks an element or λ the identity needs
        HypothesisError: A hypothesis of the formula is violated
        SeriesDivergenceError: A series failed to terminate
        InternalConsistencyError: The oracle broke down numerically
    """
    info = get_identity(tag)
    if info.elements:
        instance.require(info.elements)
    if info.needs_lambda:
        instance.require_lambda()
    effective = instance.resolve_tolerances(tolerances)
    report = info.verifier(instance, effective, instance.series_policy(policy))
    report.identity = info.tag
    report.context = instance.context.describe()
    logger.debug(
        f"{info.tag} on {report.context}: "
        f"{'pass' if report.passed else 'FAIL ' + ', '.join(report.failures())}"
    )
    return report


# === SHARED CHECKS ===


def _closure_tolerances(tolerances: Tolerances) -> Tolerances:
    """Formula outputs carry formula-level error, so their axioms are graded at tol_acc."""
    return tolerances.with_overrides(
        tol_res=max(tolerances.tol_res, tolerances.tol_acc),
        tol_rad=max(tolerances.tol_rad, tolerances.tol_acc),
    )


def compare_with_oracle(
    report: VerificationReport,
    name: str,
    formula: AlgebraElement,
    combined: AlgebraElement,
    tolerances: Tolerances,
) -> PDrazinResult:
    """Record formula-vs-oracle and the axioms of `formula` as an inverse of `combined`."""
    oracle = pdrazin(combined, tolerances)
    report.record(
        FORMULA, name, relative_difference(formula, oracle.inverse), tolerances.tol_acc
    )
    axioms = check_pdrazin_axioms(
        combined, formula, oracle.radical_index, _closure_tolerances(tolerances)
    )
    report.merge(axioms, prefix=f"{name}.")
    return oracle


def _powers(instance: InstanceFile, key: str) -> Tuple[int, ...]:
    return (instance.n,) if instance.n is not None else DEFAULT_POWERS[key]


def _new(tag: str) -> VerificationReport:
    return VerificationReport(identity=tag)


def _pair(instance: InstanceFile) -> Tuple[AlgebraElement, AlgebraElement]:
    a, b = instance.require(["a", "b"])
    return a, b


# === SINGLE ELEMENTS, PRODUCTS AND SUMS ===


@register("oracle", "p-Drazin axioms of the oracle inverse", elements=("a",))
def verify_oracle(
    instance: InstanceFile, tolerances: Tolerances, policy: SeriesPolicy
) -> VerificationReport:
    a = instance.element("a")
    r = pdrazin(a, tolerances)
    report = _new("oracle")
    report.merge(check_pdrazin_axioms(a, r.inverse, r.radical_index, tolerances))

    spectral = r.spectral_idempotent
    report.record(
        IDENTITY,
        "idempotent",
        relative_difference(mul(spectral, spectral), spectral),
        tolerances.tol_res,
    )
    a_ainv = mul(a, r.inverse)
    report.record(
        IDENTITY,
        "annihilation",
        norm(mul(spectral, a_ainv)) / max(1.0, norm(a_ainv)),
        tolerances.tol_res,
    )
    report.record(
        IDENTITY,
        "nilpotent_part",
        nilpotency_residual(mul(a, spectral)),
        tolerances.tol_res,
    )
    if r.drazin_index == 0:
        report.record(IDENTITY, "invertible_projector", norm(spectral), tolerances.tol_res)
    excess = r.radical_index - r.drazin_index if r.drazin_index >= 1 else 0
    report.record(IDENTITY, "radical_index_bound", float(max(0, excess)), 0.0)
    report.documentation["drazin_index"] = float(r.drazin_index)
    report.documentation["radical_index"] = float(r.radical_index)
    return report


@register("lem2.1", "(ab)^‡ = a^‡ b^‡ for commuting a, b")
def verify_product_commuting(
    instance: InstanceFile, tolerances: Tolerances, policy: SeriesPolicy
) -> VerificationReport:
    a, b = _pair(instance)
    result = product_commuting(a, b, tolerances)
    report = _new("lem2.1")
    hypotheses.record(report, "commutation", commutation_residual(a, b), tolerances)
    compare_with_oracle(report, "product", result, mul(a, b), tolerances)

    a_inv = pdrazin(a, tolerances).inverse
    square = pdrazin(mul(a, a), tolerances).inverse
    report.record(
        IDENTITY,
        "(a^2)^D",
        relative_difference(square, mul(a_inv, a_inv)),
        tolerances.tol_acc,
    )
    return report


@register("lem2.2", "ab, ba and (a+b)^k stay in the radical for radical a (and b)")
def verify_radical_ideal(
    instance: InstanceFile, tolerances: Tolerances, policy: SeriesPolicy
) -> VerificationReport:
    a, b = _pair(instance)
    a_residual = radical_membership_residual(a)
    gate("radical_membership", a_residual, tolerances, accept=tolerances.tol_rad)
    report = _new("lem2.2")
    hypotheses.record(
        report, "radical_membership", a_residual, tolerances, accept=tolerances.tol_rad
    )

    report.record(
        IDENTITY, "ab_in_radical", radical_membership_residual(mul(a, b)), tolerances.tol_rad
    )
    report.record(
        IDENTITY, "ba_in_radical", radical_membership_residual(mul(b, a)), tolerances.tol_rad
    )
    if radical_membership_residual(b) <= tolerances.tol_rad:
        s = add(a, b)
        for k in range(1, a.rep_dim + 1):
            report.record(
                IDENTITY,
                f"(a+b)^{k}_in_radical",
                radical_membership_residual(power(s, k)),
                tolerances.tol_rad,
            )
    else:
        report.skipped.append("sum_powers_in_radical")
    return report


@register("thm2.3", "powers and iterated inverses of a^‡", elements=("a",))
def verify_power_inverses(
    instance: InstanceFile, tolerances: Tolerances, policy: SeriesPolicy
) -> VerificationReport:
    a = instance.element("a")
    a_inv = pdrazin(a, tolerances).inverse
    report = _new("thm2.3")
    for n in _powers(instance, "thm2.3"):
        report.record(
            FORMULA,
            f"(a^{n})^D",
            relative_difference(pdrazin(power(a, n), tolerances).inverse, power(a_inv, n)),
            tolerances.tol_acc,
        )
    double = pdrazin(a_inv, tolerances).inverse
    triple = pdrazin(double, tolerances).inverse
    checks = {
        "(a^D)^D": (double, mul(mul(a, a), a_inv)),
        "((a^D)^D)^D": (triple, a_inv),
        "a^D(a^D)^D": (mul(a_inv, double), mul(a, a_inv)),
    }
    for name, (lhs, rhs) in checks.items():
        report.record(FORMULA, name, relative_difference(lhs, rhs), tolerances.tol_acc)
    return report


@register("cor2.4", "(a^‡)^‡ = a exactly when a is group invertible", elements=("a",))
def verify_double_inverse(
    instance: InstanceFile, tolerances: Tolerances, policy: SeriesPolicy
) -> VerificationReport:
    a = instance.element("a")
    r = pdrazin(a, tolerances)
    double = pdrazin(r.inverse, tolerances).inverse
    residual = relative_difference(double, a)
    report = _new("cor2.4")
    if r.drazin_index <= 1:
        report.record(FORMULA, "(a^D)^D=a", residual, tolerances.tol_acc)
    else:
        # index >= 2: the double inverse must stay away from a
        report.record(IDENTITY, "(a^D)^D!=a", residual, tolerances.separation, ">")
    report.documentation["drazin_index"] = float(r.drazin_index)
    return report


@register("thm2.5", "(a+b)^‡ = a^‡ + b^‡ for ab = ba = 0")
def verify_orthogonal_sum(
    instance: InstanceFile, tolerances: Tolerances, policy: SeriesPolicy
) -> VerificationReport:
    a, b = _pair(instance)
    result = add_orthogonal(a, b, tolerances)
    report = _new("thm2.5")
    hypotheses.record(report, "orthogonality", orthogonality_residual(a, b), tolerances)
    compare_with_oracle(report, "sum", result, add(a, b), tolerances)
    return report


@register("cor2.6", "(a1+...+an)^‡ = a1^‡ + ... + an^‡ for pairwise orthogonal ai", ())
def verify_orthogonal_sum_n(
    instance: InstanceFile, tolerances: Tolerances, policy: SeriesPolicy
) -> VerificationReport:
    elements = instance.numbered("a")
    result = add_orthogonal_n(elements, tolerances)
    report = _new("cor2.6")
    total = elements[0]
    for i, x in enumerate(elements):
        for j in range(i + 1, len(elements)):
            hypotheses.record(
                report,
                f"orthogonality_{i + 1}_{j + 1}",
                orthogonality_residual(x, elements[j]),
                tolerances,
            )
        if i:
            total = add(total, x)
    compare_with_oracle(report, "sum", result, total, tolerances)
    return report


@register("thm2.7", "commuting sum formula and (1 + a^‡b)^‡ from (a+b)^‡")
def verify_commuting_sum(
    instance: InstanceFile, tolerances: Tolerances, policy: SeriesPolicy
) -> VerificationReport:
    a, b = _pair(instance)
    trace = add_commuting_trace(a, b, policy, tolerances)
    report = _new("thm2.7")
    hypotheses.record(report, "commutation", commutation_residual(a, b), tolerances)
    oracle = compare_with_oracle(report, "sum", trace.result, add(a, b), tolerances)
    report.series_terms["series"] = trace.series_terms

    one_plus = one_plus_from_sum(a, b, oracle.inverse, tolerances)
    c = add(identity(a.context), mul(pdrazin(a, tolerances).inverse, b))
    compare_with_oracle(report, "one_plus", one_plus, c, tolerances)
    return report


def _verify_special(case: SpecialCase) -> Verifier:
    tag = f"cor2.8-{case.value}"

    def verifier(
        instance: InstanceFile, tolerances: Tolerances, policy: SeriesPolicy
    ) -> VerificationReport:
        a, b = _pair(instance)
        trace = specialize_2_8_trace(a, b, case, policy, tolerances)
        report = _new(tag)
        hypotheses.record(report, "commutation", commutation_residual(a, b), tolerances)
        if case is SpecialCase.NILPOTENT:
            residual = nilpotency_residual(a)
        elif case is SpecialCase.INVERTIBLE:
            residual = invertibility_residual(pdrazin(a, tolerances))
        else:
            residual = group_residual(a, pdrazin(a, tolerances))
        hypotheses.record(report, case.value, residual, tolerances)

        oracle = compare_with_oracle(report, "sum", trace.result, add(a, b), tolerances)
        report.series_terms["series"] = trace.series_terms
        report.documentation["printed_form_residual"] = relative_difference(
            trace.printed, oracle.inverse
        )
        return report

    return verifier


for _case in SpecialCase:
    register(
        f"cor2.8-{_case.value}",
        f"commuting sum specialised to {_case.value} a (corrected and printed forms)",
    )(_verify_special(_case))


# === λ-COMMUTING PAIRS ===


def _lambda_report(tag: str, pair: LambdaPair, tolerances: Tolerances) -> VerificationReport:
    report = _new(tag)
    hypotheses.record(
        report, "lambda_commutation", hypotheses.lambda_residual(pair), tolerances
    )
    return report


def _copy_identities(
    target: VerificationReport, source: VerificationReport, names: List[str]
) -> None:
    for name in names:
        target.checks[IDENTITY][name] = source.checks[IDENTITY][name]


@register("lem3.1", "ab^n = λ^n b^n a, a^n b = λ^n b a^n, (ab)^n", needs_lambda=True)
def verify_lambda_powers(
    instance: InstanceFile, tolerances: Tolerances, policy: SeriesPolicy
) -> VerificationReport:
    pair = instance.lambda_pair()
    report = _lambda_report("lem3.1", pair, tolerances)
    for n in _powers(instance, "lambda"):
        full = lambda_power_identities(pair, n, tolerances)
        _copy_identities(report, full, [f"a*b^{n}", f"a^{n}*b", f"(ab)^{n}"])
    return report


@register("lem3.2", "a a^‡ b = b a a^‡ and b b^‡ a = a b b^‡", needs_lambda=True)
def verify_lambda_projections(
    instance: InstanceFile, tolerances: Tolerances, policy: SeriesPolicy
) -> VerificationReport:
    pair = instance.lambda_pair()
    report = _lambda_report("lem3.2", pair, tolerances)
    swaps = lambda_swap_relations(pair, tolerances)
    _copy_identities(report, swaps, ["a*a^D*b", "b*b^D*a"])
    return report


@register(
    "thm3.3",
    "a^‡b = λ^-1 b a^‡ and (ab)^‡ = b^‡ a^‡ = λ^-1 a^‡ b^‡",
    needs_lambda=True,
)
def verify_lambda_product(
    instance: InstanceFile, tolerances: Tolerances, policy: SeriesPolicy
) -> VerificationReport:
    pair = instance.lambda_pair()
    a, b, lam = pair.a, pair.b, pair.lam
    result = product_lambda(pair, tolerances)
    report = _lambda_report("thm3.3", pair, tolerances)
    swaps = lambda_swap_relations(pair, tolerances)
    _copy_identities(report, swaps, ["a^D*b", "a*b^D"])

    compare_with_oracle(report, "product", result, mul(a, b), tolerances)
    a_inv = pdrazin(a, tolerances).inverse
    b_inv = pdrazin(b, tolerances).inverse
    report.record(
        IDENTITY,
        "b^D*a^D=a^D*b^D/lambda",
        relative_difference(result, scale(mul(a_inv, b_inv), 1 / lam)),
        tolerances.tol_acc,
    )
    if lam == 1:
        report.record(
            IDENTITY,
            "commuting_reduction",
            relative_difference(result, product_commuting(a, b, tolerances)),
            tolerances.tol_acc,
        )
    return report


@register("cor3.4", "(a^‡b)^n and (ab^‡)^n power laws", needs_lambda=True)
def verify_lambda_inverse_powers(
    instance: InstanceFile, tolerances: Tolerances, policy: SeriesPolicy
) -> VerificationReport:
    pair = instance.lambda_pair()
    report = _lambda_report("cor3.4", pair, tolerances)
    for n in _powers(instance, "lambda"):
        full = lambda_power_identities(pair, n, tolerances)
        _copy_identities(report, full, [f"(a^D*b)^{n}", f"(a*b^D)^{n}"])
        report.record(
            IDENTITY,
            f"a^D*(b*a^D)^{n}",
            scaled_power_residual(pair, n, tolerances),
            tolerances.tol_acc,
        )
    return report


@register("thm3.5", "(a-b)^‡ by the λ-commuting difference series", needs_lambda=True)
def verify_lambda_difference(
    instance: InstanceFile, tolerances: Tolerances, policy: SeriesPolicy
) -> VerificationReport:
    pair = instance.lambda_pair()
    a, b = pair.a, pair.b
    trace = sub_lambda(pair, policy, tolerances)
    report = _lambda_report("thm3.5", pair, tolerances)
    diff = sub(a, b)
    oracle = compare_with_oracle(report, "difference", trace.result, diff, tolerances)
    report.series_terms["left"] = trace.series_left_terms
    report.series_terms["right"] = trace.series_right_terms

    ra = pdrazin(a, tolerances)
    rb = pdrazin(b, tolerances)
    a_proj = mul(a, ra.inverse)
    b_proj = mul(b, rb.inverse)
    w = mul(mul(a_proj, diff), b_proj)
    report.record(IDENTITY, "w", relative_difference(trace.w, w), tolerances.tol_res)
    report.record(
        IDENTITY,
        "w^D=aa^D(a-b)^D*bb^D",
        relative_difference(
            trace.w_inverse, mul(mul(a_proj, oracle.inverse), b_proj)
        ),
        tolerances.tol_acc,
    )
    report.documentation["printed_w_round_trip_residual"] = relative_difference(
        trace.w_inverse, mul(mul(ra.inverse, oracle.inverse), b_proj)
    )
    if pair.lam == 1:
        report.record(
            IDENTITY,
            "commuting_reduction",
            relative_difference(
                trace.result, add_commuting(a, scale(b, -1.0), policy, tolerances)
            ),
            tolerances.tol_acc,
        )
    return report


@register("cor3.6", "(a-b)^D by finite sums bounded by the indices", needs_lambda=True)
def verify_lambda_difference_finite(
    instance: InstanceFile, tolerances: Tolerances, policy: SeriesPolicy
) -> VerificationReport:
    pair = instance.lambda_pair()
    finite = sub_lambda_finite(pair, tolerances)
    report = _lambda_report("cor3.6", pair, tolerances)
    compare_with_oracle(report, "difference", finite, sub(pair.a, pair.b), tolerances)
    report.record(
        IDENTITY,
        "finite=series",
        relative_difference(finite, sub_lambda(pair, policy, tolerances).result),
        tolerances.tol_acc,
    )
    return report
