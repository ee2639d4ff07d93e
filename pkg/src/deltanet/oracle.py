"""Brute-force exact-probability reference for small tree nets.

Builds the explicit joint distribution implied by a network under
conditional independence (every variable depends only on its single
parent) and answers posterior queries by enumeration.  Used to certify
propagation, the sequential formulas, and the modularity property.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .core import DELTA1, DomainError, check_probability
from .interpretations import update_from_probs
from .network import Finding, Network, Node, Rule, posterior_report
from .combination import recover_conditionals

MAX_VARIABLES = 12


@dataclass
class JointModel:
    """Explicit joint distribution over binary variables.

    table maps each full assignment (tuple of bools, ordered like
    variables) to its probability mass.
    """

    variables: list[str]
    table: dict[tuple[bool, ...], float]

    def __post_init__(self) -> None:
        total = sum(self.table.values())
        if abs(total - 1.0) > 1e-12:
            raise DomainError(f"joint distribution sums to {total!r}, not 1")

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def marginal(self, name: str) -> float:
        i = self.index(name)
        return sum(p for a, p in self.table.items() if a[i])


def build_joint(
    net: Network,
    root_prior: float,
    observations: dict[str, tuple[float, float]] | None = None,
) -> JointModel:
    """Materialize the joint over all net nodes plus observation variables.

    observations maps a leaf id to (p(E'|E), p(E'|~E)); each adds a
    variable named ``<leaf>_obs``.
    """
    check_probability(root_prior, "root_prior")
    observations = observations or {}
    root = net.root_id()
    # conditional tables: child given parent
    cond: dict[str, tuple[float, float, str]] = {}  # var -> (p|parent, p|~parent, parent)
    for rule in net.rules:
        l_p, l_a = rule.lambda_pair()
        p_e_h, p_e_nh = recover_conditionals(l_p, l_a)
        cond[rule.evidence] = (p_e_h, p_e_nh, rule.hypothesis)
    variables = list(net.node_ids())
    leaves = net.leaf_ids()
    for leaf in sorted(observations):
        if leaf not in leaves:
            raise DomainError(f"observation attached to non-leaf node {leaf}")
        p_obs_e, p_obs_ne = observations[leaf]
        check_probability(p_obs_e, "p(E'|E)")
        check_probability(p_obs_ne, "p(E'|~E)")
        name = f"{leaf}_obs"
        cond[name] = (p_obs_e, p_obs_ne, leaf)
        variables.append(name)
    if len(variables) > MAX_VARIABLES:
        raise DomainError(f"joint would need {len(variables)} variables (cap {MAX_VARIABLES})")
    table: dict[tuple[bool, ...], float] = {}
    idx = {v: i for i, v in enumerate(variables)}
    for assignment in itertools.product((False, True), repeat=len(variables)):
        p = root_prior if assignment[idx[root]] else 1.0 - root_prior
        for var, (p_true, p_false, parent) in cond.items():
            given = p_true if assignment[idx[parent]] else p_false
            p *= given if assignment[idx[var]] else 1.0 - given
        table[assignment] = p
    return JointModel(variables, table)


def exact_posterior(jm: JointModel, evidence: dict[str, bool], query: str) -> float:
    """p(query = true | evidence) by enumeration."""
    qi = jm.index(query)
    ev = [(jm.index(name), value) for name, value in evidence.items()]
    mass = 0.0
    hit = 0.0
    for assignment, p in jm.table.items():
        if all(assignment[i] == v for i, v in ev):
            mass += p
            if assignment[qi]:
                hit += p
    if mass == 0.0:
        raise DomainError("evidence assignment has zero probability")
    return hit / mass


def _subtree_nodes(net: Network, node_id: str) -> set[str]:
    children = net.children()
    out = {node_id}
    stack = [node_id]
    while stack:
        for rule in children[stack.pop()]:
            out.add(rule.evidence)
            stack.append(rule.evidence)
    return out


def check_propagation(
    net: Network,
    findings: dict[str, Finding],
    root_prior: float,
) -> float:
    """Max deviation between delta1 posteriors and exact enumeration.

    Findings must be certain (+-1).  Propagation computes, for each
    node, its posterior given the evidence inside its own subtree, so
    each node is checked against enumeration conditioned on exactly
    that evidence.
    """
    evidence: dict[str, bool] = {}
    for leaf, finding in findings.items():
        if finding.update not in (1.0, -1.0):
            raise DomainError("check_propagation requires certain (+-1) findings")
        evidence[leaf] = finding.update == 1.0
    jm = build_joint(net, root_prior)
    report = posterior_report(net, findings, DELTA1, root_prior)
    worst = 0.0
    for node_id in net.node_ids():
        scope = _subtree_nodes(net, node_id)
        local_evidence = {k: v for k, v in evidence.items() if k in scope and k != node_id}
        expected = exact_posterior(jm, local_evidence, node_id) if node_id not in evidence \
            else (1.0 if evidence[node_id] else 0.0)
        got = report.posteriors[node_id]
        if got is None:
            raise DomainError(f"no posterior for node {node_id}")
        worst = max(worst, abs(got - expected))
    return worst


def check_sequential(
    l_he: float,
    l_hnote: float,
    obs: tuple[float, float],
    root_prior: float,
) -> float:
    """Deviation of the chained-lambda route on an E' -> E -> H chain.

    obs gives (p(E'|E), p(E'|~E)).  Compares the propagated posterior of
    H given E' = true against enumeration.
    """
    from .combination import sequential_lambda
    from .core import odds_of, prob_of

    net = Network(
        nodes=[Node("H"), Node("E")],
        rules=[Rule("E", "H", math.log(l_he), math.log(l_hnote), {"lambda": [l_he, l_hnote]})],
    )
    jm = build_joint(net, root_prior, observations={"E": obs})
    p_obs_e, p_obs_ne = obs
    if p_obs_ne == 0.0:
        l_eep = math.inf if p_obs_e > 0.0 else 1.0
    else:
        l_eep = p_obs_e / p_obs_ne
    lam = sequential_lambda(l_he, l_hnote, l_eep)
    got = prob_of(lam * odds_of(root_prior)) if not math.isinf(lam) else 1.0
    expected = exact_posterior(jm, {"E_obs": True}, "H")
    return abs(got - expected)


def delta1_between(jm: JointModel, query: str, target: str, given: dict[str, bool]) -> float:
    """delta1 update on query contributed by target=true, conditioned on given."""
    prior = exact_posterior(jm, given, query)
    posterior = exact_posterior(jm, {**given, target: True}, query)
    return update_from_probs(DELTA1, posterior, prior)


def check_modularity(jm: JointModel, hypothesis: str, e1: str, e2: str) -> float:
    """How much the update from e1 shifts when e2 is also known.

    Vanishes exactly when e1 and e2 are conditionally independent given
    the hypothesis and its negation.
    """
    bare = delta1_between(jm, hypothesis, e1, {})
    conditioned = delta1_between(jm, hypothesis, e1, {e2: True})
    return abs(bare - conditioned)


# ---------------------------------------------------------------------------
# Random coherent nets for certification sweeps


def random_network(rng: random.Random, max_nodes: int = 6) -> tuple[Network, float]:
    """Random coherent tree net plus a root prior.

    Conditional probabilities are sampled uniformly on [0.05, 0.95];
    nearly-equal pairs are rejected as zero-information.
    """
    n = rng.randint(2, max_nodes)
    nodes = [Node(f"n{i}") for i in range(n)]
    rules = []
    for i in range(1, n):
        parent = f"n{rng.randrange(i)}"
        while True:
            p_e_h = rng.uniform(0.05, 0.95)
            p_e_nh = rng.uniform(0.05, 0.95)
            if abs(p_e_h - p_e_nh) > 1e-3:
                break
        rules.append(
            Rule(
                f"n{i}",
                parent,
                math.log(p_e_h / p_e_nh),
                math.log((1.0 - p_e_h) / (1.0 - p_e_nh)),
                {"conditionals": [p_e_h, p_e_nh]},
            )
        )
    net = Network(nodes, rules)
    return net, rng.uniform(0.1, 0.9)


def random_certain_findings(rng: random.Random, net: Network) -> dict[str, Finding]:
    return {
        leaf: Finding(update=rng.choice([1.0, -1.0]), interpretation=DELTA1)
        for leaf in sorted(net.leaf_ids())
    }
