"""Conversions among probabilities, likelihood ratios, weights and updates.

The fixed map carries probabilities to weight space via the logit; each
interpretation supplies an odd, strictly increasing map G from weight
space onto (-1, 1).  All conversions route through these two maps.  The
"orig" interpretation (the historical piecewise definition) has no G
map and supports only the probability-pair conversions; "mycin-legacy"
delegates conversions to the cf map, which reproduces the legacy
parallel combination exactly.
"""

from __future__ import annotations

import math

from .core import (
    CF,
    INF,
    ContradictionError,
    DomainError,
    Interpretation,
    UnsupportedInterpretationError,
    check_probability,
    check_update,
    exp_weight,
    odds_of,
    prob_of,
)


def logit(p: float) -> float:
    """ln(p/(1-p)); -inf at 0, +inf at 1."""
    check_probability(p)
    if p == 0.0:
        return -INF
    if p == 1.0:
        return INF
    return math.log(p / (1.0 - p))


def weight_from_probs(posterior: float, prior: float) -> float:
    """Weight of evidence as the difference of mapped posterior and prior."""
    lp = logit(check_probability(posterior, "posterior"))
    lq = logit(check_probability(prior, "prior"))
    if math.isinf(lp) and math.isinf(lq):
        if (lp > 0) == (lq > 0):
            raise DomainError("degenerate prior: posterior and prior both certain")
        # posterior 1 with prior 0 (or vice versa): certain reversal
        raise ContradictionError("posterior contradicts a certain prior")
    if math.isinf(lp):
        return lp
    if math.isinf(lq):
        # prior certain, posterior not: evidence cannot move a certainty
        raise ContradictionError("posterior contradicts a certain prior")
    return lp - lq


def _require_g(interp: Interpretation) -> Interpretation:
    if not interp.is_probabilistic:
        raise UnsupportedInterpretationError(
            f"{interp} has no generating map; use a probabilistic interpretation"
        )
    return interp


def conversion_interp(interp: Interpretation) -> Interpretation:
    """Interpretation used for value conversions; mycin-legacy borrows cf."""
    if interp.kind == "mycin-legacy":
        return CF
    return _require_g(interp)


def g_apply(interp: Interpretation, w: float) -> float:
    """Map a weight of evidence onto an update in [-1, 1]."""
    _require_g(interp)
    if math.isnan(w):
        raise DomainError("weight must not be NaN")
    if interp.kind == "delta1":
        return math.tanh(w / 2.0)
    if interp.kind == "deltan":
        if math.isinf(w):
            return 1.0 if w > 0 else -1.0
        s = math.copysign(abs(w) ** (1.0 / interp.n), w)
        return math.tanh(s / 2.0)
    # cf: 1 - e^-w for w >= 0, e^w - 1 for w < 0
    if w >= 0.0:
        return 0.0 if w == 0.0 else -math.expm1(-w)
    return math.expm1(w)


def g_invert(interp: Interpretation, d: float) -> float:
    """Exact inverse of g_apply; +-1 map to +-inf."""
    _require_g(interp)
    check_update(d)
    if interp.kind == "delta1":
        if abs(d) == 1.0:
            return math.copysign(INF, d)
        return 2.0 * math.atanh(d)
    if interp.kind == "deltan":
        if abs(d) == 1.0:
            return math.copysign(INF, d)
        s = 2.0 * math.atanh(d)
        try:
            mag = abs(s) ** interp.n
        except OverflowError:
            mag = INF
        return math.copysign(mag, s)
    # cf
    if d == 1.0:
        return INF
    if d == -1.0:
        return -INF
    if d >= 0.0:
        return -math.log1p(-d)
    return math.log1p(d)


def update_from_probs(interp: Interpretation, posterior: float, prior: float) -> float:
    """Update induced by moving belief from prior to posterior."""
    check_probability(posterior, "posterior")
    check_probability(prior, "prior")
    if posterior == prior and posterior in (0.0, 1.0):
        raise DomainError("degenerate prior: both arguments certain")
    if interp.kind == "orig":
        if posterior > prior:
            return (posterior - prior) / (1.0 - prior)
        if prior > posterior:
            return (posterior - prior) / prior
        return 0.0
    return g_apply(conversion_interp(interp), weight_from_probs(posterior, prior))


def posterior_from_update(interp: Interpretation, prior: float, d: float) -> float:
    """Posterior probability produced by applying update d to prior."""
    check_probability(prior, "prior")
    check_update(d)
    if d == 0.0:
        return prior
    if interp.kind == "orig":
        if d > 0.0:
            if prior == 1.0:
                return 1.0
            return prior + d * (1.0 - prior)
        return prior * (1.0 + d)
    if d == 1.0 and prior == 0.0:
        raise ContradictionError("update +1 applied to prior 0")
    if d == -1.0 and prior == 1.0:
        raise ContradictionError("update -1 applied to prior 1")
    if prior == 0.0:
        return 0.0
    if prior == 1.0:
        return 1.0
    lam = lambda_from_update(interp, d)
    return prob_of(lam * odds_of(prior)) if not math.isinf(lam) else 1.0


def lambda_from_update(interp: Interpretation, d: float) -> float:
    """Likelihood ratio carried by an update."""
    check_update(d)
    ci = conversion_interp(interp)
    if ci.kind == "delta1":
        if d == 1.0:
            return INF
        return (1.0 + d) / (1.0 - d)
    return exp_weight(g_invert(ci, d))


def update_from_lambda(interp: Interpretation, lam: float) -> float:
    """Update carried by a likelihood ratio."""
    if math.isnan(lam) or lam < 0.0:
        raise DomainError(f"likelihood ratio must be nonnegative, got {lam!r}")
    if lam == 0.0:
        return -1.0
    if math.isinf(lam):
        return 1.0
    return g_apply(conversion_interp(interp), math.log(lam))


def elicit_from_conditionals(interp: Interpretation, p_e_given_h: float, p_e_given_not_h: float) -> float:
    """Update from separately elicited p(E|H) and p(E|~H)."""
    check_probability(p_e_given_h, "p(E|H)")
    check_probability(p_e_given_not_h, "p(E|~H)")
    if p_e_given_h == 0.0 and p_e_given_not_h == 0.0:
        raise DomainError("evidence impossible: p(E|H) and p(E|~H) both zero")
    if p_e_given_not_h == 0.0:
        return 1.0
    if p_e_given_h == 0.0:
        return -1.0
    return update_from_lambda(interp, p_e_given_h / p_e_given_not_h)


def elicit_from_fifty_prior(interp: Interpretation, posterior: float) -> float:
    """Update from a posterior elicited against an imagined 1/2 prior."""
    check_probability(posterior, "posterior")
    return update_from_probs(interp, posterior, 0.5)


def convert_update(from_interp: Interpretation, to_interp: Interpretation, d: float) -> float:
    """Re-express an update under another interpretation via weight space."""
    if from_interp == to_interp:
        return check_update(d)
    w = g_invert(conversion_interp(from_interp), d)
    return g_apply(conversion_interp(to_interp), w)
