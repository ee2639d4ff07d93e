"""deltanet: a belief-update engine for probabilistic certainty factors."""

from .core import (
    ABS_TOL,
    BOUNDARY_TOL,
    CF,
    DELTA1,
    MYCIN_LEGACY,
    ORIG,
    BeliefError,
    ContradictionError,
    DomainError,
    IncoherentRuleError,
    Interpretation,
    SchemaError,
    UnsupportedInterpretationError,
    deltan,
    odds_of,
    parse_interpretation,
    prob_of,
)
from .interpretations import (
    convert_update,
    elicit_from_conditionals,
    elicit_from_fifty_prior,
    g_apply,
    g_invert,
    lambda_from_update,
    logit,
    posterior_from_update,
    update_from_lambda,
    update_from_probs,
    weight_from_probs,
)
from .combination import (
    RuleStrengthPair,
    parallel_generic,
    parallel_many,
    parallel_mycin,
    parallel_orig_demo,
    sequential_delta1,
    sequential_generic,
    sequential_lambda,
    sequential_mycin,
)
from .network import (
    Finding,
    Network,
    Node,
    PosteriorReport,
    PropagationReport,
    Rule,
    derive_priors,
    findings_from_dict,
    load_findings,
    load_network,
    network_from_dict,
    network_to_dict,
    posterior_report,
    propagate,
    save_network,
    validate,
)
from .oracle import (
    JointModel,
    build_joint,
    check_modularity,
    check_propagation,
    check_sequential,
    exact_posterior,
)

__version__ = "0.1.0"
