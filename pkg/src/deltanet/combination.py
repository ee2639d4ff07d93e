"""Parallel and sequential combination of belief updates.

Parallel combination merges updates on the same hypothesis from
distinct evidence; in weight space it is plain addition, so the generic
route is invert -> add -> apply.  The legacy functions are kept as
written for comparison.  Sequential combination chains an update
through an uncertain intermediate statement and is derived in
likelihood-ratio space; it needs the full strength pair (update given
the evidence, update given its absence).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    INF,
    ContradictionError,
    DomainError,
    IncoherentRuleError,
    Interpretation,
    UnsupportedInterpretationError,
    check_update,
)
from .interpretations import g_apply, g_invert, lambda_from_update, update_from_lambda, conversion_interp
from . import interpretations


def check_pair_coherence(on_present: float, on_absent: float) -> None:
    """Reject strength pairs that no probability model can produce.

    The prior is a convex combination of the posteriors given the
    evidence and given its absence, so the two updates are either both
    zero or strictly opposite in sign.
    """
    check_update(on_present, "on_present")
    check_update(on_absent, "on_absent")
    if on_present == 0.0 and on_absent == 0.0:
        return
    if on_present > 0.0 > on_absent or on_present < 0.0 < on_absent:
        return
    raise IncoherentRuleError(
        f"incoherent strengths: ({on_present}, {on_absent}) must be zero together "
        "or oppositely signed"
    )


@dataclass(frozen=True)
class RuleStrengthPair:
    """The pair (update given E, update given ~E) attached to a rule."""

    on_present: float
    on_absent: float

    def __post_init__(self) -> None:
        check_pair_coherence(self.on_present, self.on_absent)


def _check_conflict(a: float, b: float) -> None:
    if abs(a) == 1.0 and abs(b) == 1.0 and a == -b:
        raise ContradictionError("conflicting certain evidence: updates +1 and -1")


def parallel_mycin(a: float, b: float) -> float:
    """The legacy parallel combination function."""
    check_update(a)
    check_update(b)
    _check_conflict(a, b)
    # Extreme rules come first: the mixed-sign denominator is 0/0 at (+-1, -+1).
    if abs(a) == 1.0:
        return a
    if abs(b) == 1.0:
        return b
    if a > 0.0 and b > 0.0:
        return a + b - a * b
    if a < 0.0 and b < 0.0:
        return a + b + a * b
    return (a + b) / (1.0 - min(abs(a), abs(b)))


def parallel_generic(interp: Interpretation, a: float, b: float) -> float:
    """Parallel combination by addition in weight space."""
    if interp.kind == "orig":
        raise UnsupportedInterpretationError(
            "orig is not commutative; use parallel_orig_demo for the demonstration"
        )
    if interp.kind == "mycin-legacy":
        return parallel_mycin(a, b)
    check_update(a)
    check_update(b)
    _check_conflict(a, b)
    if abs(a) == 1.0:
        return a
    if abs(b) == 1.0:
        return b
    # zero is the identity; handling it up front keeps the axiom exact even
    # for maps whose weight underflows on tiny updates (high-order roots)
    if a == 0.0:
        return b
    if b == 0.0:
        return a
    wa = g_invert(interp, a)
    wb = g_invert(interp, b)
    return g_apply(interp, wa + wb)


def parallel_many(interp: Interpretation, updates: list[float]) -> float:
    """Left fold of parallel combination over the inputs, identity 0."""
    result = 0.0
    for u in updates:
        result = parallel_generic(interp, result, u)
    return result


def parallel_orig_demo(prior: float, updates: list[float]) -> float:
    """Fold the historical piecewise updates in the given order.

    Exists to demonstrate that this interpretation is order dependent;
    it is not a valid parallel combination.
    """
    p = prior
    for d in updates:
        p = interpretations.posterior_from_update(
            Interpretation("orig"), p, check_update(d)
        )
    return p


def sequential_mycin(d_he: float, u: float) -> float:
    """The legacy sequential combination: attenuate by max(0, u)."""
    check_update(d_he)
    check_update(u)
    return d_he * max(0.0, u)


def _check_lambda_coherence(l_he: float, l_hnote: float) -> None:
    for name, v in (("lambda(H,E)", l_he), ("lambda(H,~E)", l_hnote)):
        if math.isnan(v) or v < 0.0:
            raise DomainError(f"{name} must be nonnegative, got {v!r}")
    if l_he == 1.0 and l_hnote == 1.0:
        return
    if (l_he > 1.0 and l_hnote < 1.0) or (l_he < 1.0 and l_hnote > 1.0):
        return
    raise IncoherentRuleError(
        f"incoherent likelihood ratios: ({l_he}, {l_hnote}) must straddle 1 or both equal 1"
    )


def recover_conditionals(l_he: float, l_hnote: float) -> tuple[float, float]:
    """Recover (p(E|H), p(E|~H)) from a coherent likelihood-ratio pair."""
    _check_lambda_coherence(l_he, l_hnote)
    if l_he == 1.0 and l_hnote == 1.0:
        raise DomainError("zero-strength rule leaves p(E|H), p(E|~H) unconstrained")
    if math.isinf(l_he):
        # E impossible under ~H
        return 1.0 - l_hnote, 0.0
    if math.isinf(l_hnote):
        # absence of E impossible under ~H, i.e. p(E|~H) = 1
        return l_he, 1.0
    p_e_nh = (1.0 - l_hnote) / (l_he - l_hnote)
    return l_he * p_e_nh, p_e_nh


def sequential_lambda(l_he: float, l_hnote: float, l_eep: float) -> float:
    """Chain likelihood ratios through an uncertain intermediate statement."""
    _check_lambda_coherence(l_he, l_hnote)
    if math.isnan(l_eep) or l_eep < 0.0:
        raise DomainError(f"lambda(E,E') must be nonnegative, got {l_eep!r}")
    if math.isinf(l_eep):
        return l_he
    if l_eep == 0.0:
        return l_hnote
    if l_he == 1.0 and l_hnote == 1.0:
        return 1.0
    p_e_h, p_e_nh = recover_conditionals(l_he, l_hnote)
    num = l_eep * p_e_h + (1.0 - p_e_h)
    den = l_eep * p_e_nh + (1.0 - p_e_nh)
    if den == 0.0:
        return INF
    return num / den


def sequential_delta1(d_he: float, d_hnote: float, u: float) -> float:
    """Closed-form sequential combination for the delta1 interpretation."""
    check_pair_coherence(d_he, d_hnote)
    check_update(u)
    if u == 1.0:
        return d_he
    if u == -1.0:
        return d_hnote
    if u == 0.0 or (d_he == 0.0 and d_hnote == 0.0):
        return 0.0
    num = -2.0 * d_he * d_hnote * u
    den = (d_he - d_hnote) - u * (d_he + d_hnote)
    return num / den


def sequential_generic(interp: Interpretation, pair: RuleStrengthPair, u: float) -> float:
    """Sequential combination for any probabilistic interpretation.

    Routes through likelihood-ratio space and maps the chained ratio
    back with the interpretation's own G.
    """
    ci = conversion_interp(interp)
    check_update(u)
    if u == 1.0:
        return pair.on_present
    if u == -1.0:
        return pair.on_absent
    if u == 0.0 or (pair.on_present == 0.0 and pair.on_absent == 0.0):
        return 0.0
    l_he = lambda_from_update(ci, pair.on_present)
    l_hnote = lambda_from_update(ci, pair.on_absent)
    l_eep = lambda_from_update(ci, u)
    return update_from_lambda(ci, sequential_lambda(l_he, l_hnote, l_eep))
