"""Tree inference nets: data model, delta-net/1 files, and propagation.

A network is a tree of binary statements oriented toward a single root
hypothesis.  Rules point from evidence to hypothesis and carry a
canonical strength pair in weight space (ln of the likelihood ratios
given the evidence and given its absence).  File input may declare
strengths as likelihood ratios, as updates under an interpretation, or
as conditional probabilities; all are normalized to weights at load,
and the declared form is kept for round-trip serialization.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .core import (
    INF,
    ContradictionError,
    DomainError,
    IncoherentRuleError,
    Interpretation,
    SchemaError,
    UnsupportedInterpretationError,
    check_probability,
    check_update,
    exp_weight,
    parse_interpretation,
)
from .interpretations import conversion_interp, g_apply, g_invert, weight_from_probs
from .combination import (
    RuleStrengthPair,
    parallel_generic,
    parallel_mycin,
    recover_conditionals,
    sequential_generic,
    sequential_mycin,
)

FORMAT_TAG = "delta-net/1"


@dataclass(frozen=True)
class Node:
    id: str
    description: str = ""


@dataclass(frozen=True)
class Rule:
    """Rule evidence -> hypothesis with canonical weight-space strengths."""

    evidence: str
    hypothesis: str
    w_present: float
    w_absent: float
    declared: dict = field(compare=False)

    @property
    def rule_id(self) -> str:
        return f"{self.evidence}->{self.hypothesis}"

    @property
    def is_zero(self) -> bool:
        return self.w_present == 0.0 and self.w_absent == 0.0

    @property
    def is_coherent(self) -> bool:
        if self.is_zero:
            return True
        return (self.w_present > 0.0 > self.w_absent) or (self.w_present < 0.0 < self.w_absent)

    def lambda_pair(self) -> tuple[float, float]:
        return exp_weight(self.w_present), exp_weight(self.w_absent)

    def update_pair(self, interp: Interpretation) -> tuple[float, float]:
        """Strengths as updates under the requested interpretation.

        Legacy mode keeps the numbers the rule was declared with when it
        was declared as updates; the legacy calculus attaches no
        weight-space meaning to its numbers, and comparisons against the
        probabilistic interpretations are comparisons on equal numerals.
        """
        if interp.kind == "mycin-legacy" and "delta" in self.declared:
            d_p, d_a = self.declared["delta"]
            return float(d_p), float(d_a)
        ci = conversion_interp(interp)
        return g_apply(ci, self.w_present), g_apply(ci, self.w_absent)


@dataclass(frozen=True)
class Finding:
    """A leaf observation: either an update or a (prior, posterior) pair."""

    update: float | None = None
    interpretation: Interpretation | None = None
    prior: float | None = None
    posterior: float | None = None

    def update_under(self, interp: Interpretation) -> float:
        if self.update is not None:
            assert self.interpretation is not None
            if interp.kind == "mycin-legacy" or self.interpretation == interp:
                return self.update
            w = g_invert(conversion_interp(self.interpretation), self.update)
            return g_apply(conversion_interp(interp), w)
        assert self.prior is not None and self.posterior is not None
        w = weight_from_probs(self.posterior, self.prior)
        return g_apply(conversion_interp(interp), w)


@dataclass
class Network:
    nodes: list[Node]
    rules: list[Rule]
    root_prior: float | None = None

    def node_ids(self) -> list[str]:
        return [n.id for n in self.nodes]

    def children(self) -> dict[str, list[Rule]]:
        by_hyp: dict[str, list[Rule]] = {n.id: [] for n in self.nodes}
        for r in self.rules:
            by_hyp.setdefault(r.hypothesis, []).append(r)
        return by_hyp

    def leaf_ids(self) -> set[str]:
        hyps = {r.hypothesis for r in self.rules}
        return {n.id for n in self.nodes if n.id not in hyps}

    def root_id(self) -> str:
        evidences = {r.evidence for r in self.rules}
        roots = [n.id for n in self.nodes if n.id not in evidences]
        if len(roots) != 1:
            raise DomainError(f"network does not have a unique root: {sorted(roots)}")
        return roots[0]


# ---------------------------------------------------------------------------
# delta-net/1 parsing and serialization


def _require_keys(obj: dict, allowed: set[str], required: set[str], where: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise SchemaError(f"{where}: unknown field(s) {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise SchemaError(f"{where}: missing field(s) {sorted(missing)}")


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"{where}: expected a number, got {value!r}")
    return float(value)


def _pair(value, where: str) -> tuple[float, float]:
    if not isinstance(value, list) or len(value) != 2:
        raise SchemaError(f"{where}: expected a two-element list, got {value!r}")
    return _number(value[0], where), _number(value[1], where)


def _weight_from_lambda(lam: float, where: str) -> float:
    if lam < 0.0:
        raise SchemaError(f"{where}: likelihood ratio must be nonnegative, got {lam}")
    if lam == 0.0:
        return -INF
    return math.log(lam)


def _strength_to_weights(strength: dict, where: str) -> tuple[float, float]:
    if not isinstance(strength, dict):
        raise SchemaError(f"{where}: strength must be an object")
    forms = [k for k in ("lambda", "delta", "conditionals") if k in strength]
    if len(forms) != 1:
        raise SchemaError(f"{where}: strength must use exactly one of lambda/delta/conditionals")
    form = forms[0]
    if form == "lambda":
        _require_keys(strength, {"lambda"}, {"lambda"}, where)
        l_p, l_a = _pair(strength["lambda"], where)
        return _weight_from_lambda(l_p, where), _weight_from_lambda(l_a, where)
    if form == "delta":
        _require_keys(strength, {"delta", "interpretation"}, {"delta", "interpretation"}, where)
        d_p, d_a = _pair(strength["delta"], where)
        try:
            interp = parse_interpretation(strength["interpretation"])
            ci = conversion_interp(interp)
            return g_invert(ci, d_p), g_invert(ci, d_a)
        except (DomainError, UnsupportedInterpretationError) as exc:
            raise SchemaError(f"{where}: {exc}") from exc
    _require_keys(strength, {"conditionals"}, {"conditionals"}, where)
    p_eh, p_enh = _pair(strength["conditionals"], where)
    try:
        check_probability(p_eh, "p(E|H)")
        check_probability(p_enh, "p(E|~H)")
    except DomainError as exc:
        raise SchemaError(f"{where}: {exc}") from exc
    if p_eh == 0.0 and p_enh == 0.0:
        raise SchemaError(f"{where}: evidence impossible under H and ~H")
    if p_eh == 1.0 and p_enh == 1.0:
        raise SchemaError(f"{where}: evidence certain under H and ~H")
    w_p = _weight_from_lambda(p_eh, where) - _weight_from_lambda(p_enh, where) \
        if p_eh > 0.0 and p_enh > 0.0 else (INF if p_enh == 0.0 else -INF)
    w_a = _weight_from_lambda(1.0 - p_eh, where) - _weight_from_lambda(1.0 - p_enh, where) \
        if p_eh < 1.0 and p_enh < 1.0 else (INF if p_enh == 1.0 else -INF)
    return w_p, w_a


def network_from_dict(doc: dict) -> Network:
    if not isinstance(doc, dict):
        raise SchemaError("network document must be an object")
    _require_keys(doc, {"format", "nodes", "rules", "root_prior"}, {"format", "nodes", "rules"}, "network")
    if doc["format"] != FORMAT_TAG:
        raise SchemaError(f"network: format must be {FORMAT_TAG!r}, got {doc['format']!r}")
    if not isinstance(doc["nodes"], list) or not isinstance(doc["rules"], list):
        raise SchemaError("network: nodes and rules must be lists")
    nodes = []
    for i, n in enumerate(doc["nodes"]):
        where = f"nodes[{i}]"
        if not isinstance(n, dict):
            raise SchemaError(f"{where}: expected an object")
        _require_keys(n, {"id", "description"}, {"id"}, where)
        if not isinstance(n["id"], str) or not n["id"]:
            raise SchemaError(f"{where}: id must be a non-empty string")
        nodes.append(Node(n["id"], str(n.get("description", ""))))
    rules = []
    for i, r in enumerate(doc["rules"]):
        where = f"rules[{i}]"
        if not isinstance(r, dict):
            raise SchemaError(f"{where}: expected an object")
        _require_keys(r, {"evidence", "hypothesis", "strength"}, {"evidence", "hypothesis", "strength"}, where)
        w_p, w_a = _strength_to_weights(r["strength"], where)
        rules.append(Rule(str(r["evidence"]), str(r["hypothesis"]), w_p, w_a, r["strength"]))
    root_prior = None
    if "root_prior" in doc:
        root_prior = _number(doc["root_prior"], "root_prior")
        try:
            check_probability(root_prior, "root_prior")
        except DomainError as exc:
            raise SchemaError(str(exc)) from exc
    return Network(nodes, rules, root_prior)


def network_to_dict(net: Network) -> dict:
    doc: dict = {
        "format": FORMAT_TAG,
        "nodes": [
            {"id": n.id, "description": n.description} if n.description else {"id": n.id}
            for n in net.nodes
        ],
        "rules": [
            {"evidence": r.evidence, "hypothesis": r.hypothesis, "strength": r.declared}
            for r in net.rules
        ],
    }
    if net.root_prior is not None:
        doc["root_prior"] = net.root_prior
    return doc


def load_network(path: str) -> Network:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return network_from_dict(doc)


def save_network(net: Network, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(network_to_dict(net), fh, indent=2)
        fh.write("\n")


def findings_from_dict(doc: dict) -> dict[str, Finding]:
    if not isinstance(doc, dict):
        raise SchemaError("findings document must be an object")
    if doc.get("format") != FORMAT_TAG:
        raise SchemaError(f"findings: format must be {FORMAT_TAG!r}")
    findings: dict[str, Finding] = {}
    for key, value in doc.items():
        if key == "format":
            continue
        where = f"findings[{key!r}]"
        if not isinstance(value, dict):
            raise SchemaError(f"{where}: expected an object")
        if "update" in value:
            _require_keys(value, {"update", "interpretation"}, {"update", "interpretation"}, where)
            try:
                interp = parse_interpretation(value["interpretation"])
                upd = check_update(_number(value["update"], where))
            except DomainError as exc:
                raise SchemaError(f"{where}: {exc}") from exc
            findings[key] = Finding(update=upd, interpretation=interp)
        else:
            _require_keys(value, {"prior", "posterior"}, {"prior", "posterior"}, where)
            try:
                prior = check_probability(_number(value["prior"], where), "prior")
                posterior = check_probability(_number(value["posterior"], where), "posterior")
            except DomainError as exc:
                raise SchemaError(f"{where}: {exc}") from exc
            findings[key] = Finding(prior=prior, posterior=posterior)
    return findings


def load_findings(path: str) -> dict[str, Finding]:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return findings_from_dict(doc)


# ---------------------------------------------------------------------------
# Validation


def validate(net: Network) -> list[str]:
    """Structural and coherence checks; returns human-readable violations."""
    violations = []
    seen: set[str] = set()
    for n in net.nodes:
        if n.id in seen:
            violations.append(f"duplicate node id: {n.id}")
        seen.add(n.id)
    ids = set(net.node_ids())
    evidence_count: dict[str, int] = {}
    for r in net.rules:
        if r.evidence not in ids:
            violations.append(f"rule {r.rule_id}: unknown evidence node {r.evidence}")
        if r.hypothesis not in ids:
            violations.append(f"rule {r.rule_id}: unknown hypothesis node {r.hypothesis}")
        if r.evidence == r.hypothesis:
            violations.append(f"rule {r.rule_id}: evidence equals hypothesis")
        evidence_count[r.evidence] = evidence_count.get(r.evidence, 0) + 1
        legacy = r.declared.get("interpretation") in ("mycin", "mycin-legacy") \
            if isinstance(r.declared, dict) else False
        if not legacy and not r.is_coherent:
            violations.append(
                f"rule {r.rule_id}: incoherent strengths "
                f"(weights {r.w_present:g}, {r.w_absent:g} must be zero together or oppositely signed)"
            )
    for node_id, count in sorted(evidence_count.items()):
        if count > 1:
            violations.append(f"node {node_id}: multiple paths (evidence of {count} rules)")
    if violations:
        return violations
    # Tree shape: unique root, no cycles, connected.
    parent = {r.evidence: r.hypothesis for r in net.rules}
    roots = [i for i in ids if i not in parent]
    if len(roots) != 1:
        violations.append(f"network must have exactly one root, found {sorted(roots)}")
        return violations
    for start in ids:
        seen_path = set()
        node = start
        while node in parent:
            if node in seen_path:
                violations.append(f"cycle involving node {node}")
                return violations
            seen_path.add(node)
            node = parent[node]
    return violations


def _require_valid(net: Network) -> None:
    problems = validate(net)
    if problems:
        raise DomainError("invalid network: " + "; ".join(problems))


# ---------------------------------------------------------------------------
# Propagation


@dataclass(frozen=True)
class Contribution:
    rule_id: str
    child_update: float
    sequential: float
    running: float


@dataclass
class PropagationReport:
    interpretation: Interpretation
    updates: dict[str, float]
    contributions: dict[str, list[Contribution]]
    warnings: list[str] = field(default_factory=list)

    def render(self) -> str:
        lines = [f"interpretation: {self.interpretation}"]
        for node_id in sorted(self.updates):
            u = self.updates[node_id]
            lines.append(f"node {node_id}: update {u:.4f} (exact {u!r})")
            for c in self.contributions.get(node_id, []):
                lines.append(
                    f"  {c.rule_id}: child {c.child_update:.4f} "
                    f"-> sequential {c.sequential:.4f} -> running {c.running:.4f}"
                )
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines) + "\n"


def _check_findings_keys(net: Network, findings: dict[str, Finding]) -> None:
    leaves = net.leaf_ids()
    for key in findings:
        if key not in set(net.node_ids()):
            raise DomainError(f"finding for unknown node {key}")
        if key not in leaves:
            raise DomainError(f"finding for non-leaf node {key}")


def propagate(net: Network, findings: dict[str, Finding], interp: Interpretation) -> PropagationReport:
    """Bottom-up update propagation with per-rule explanation.

    Each leaf's finding becomes its update (unobserved leaves carry the
    no-information update 0).  Each internal node receives one
    sequential contribution per child rule; contributions are folded
    with parallel combination in rule declaration order.
    """
    if interp.kind == "orig":
        raise UnsupportedInterpretationError("orig cannot be propagated (non-commutative)")
    _require_valid(net)
    _check_findings_keys(net, findings)
    children = net.children()
    legacy = interp.kind == "mycin-legacy"
    updates: dict[str, float] = {}
    contributions: dict[str, list[Contribution]] = {}

    def node_update(node_id: str) -> float:
        if node_id in updates:
            return updates[node_id]
        rules = children[node_id]
        if not rules:
            u = findings[node_id].update_under(interp) if node_id in findings else 0.0
            updates[node_id] = u
            return u
        running = 0.0
        entries = []
        for rule in rules:
            child_u = node_update(rule.evidence)
            d_p, d_a = rule.update_pair(interp)
            if legacy:
                seq = sequential_mycin(d_p, child_u)
                try:
                    running = parallel_mycin(running, seq)
                except ContradictionError as exc:
                    raise ContradictionError(
                        f"node {node_id}: {exc} (via {rule.rule_id})"
                    ) from exc
            else:
                try:
                    seq = sequential_generic(interp, RuleStrengthPair(d_p, d_a), child_u)
                    running = parallel_generic(interp, running, seq)
                except IncoherentRuleError as exc:
                    raise IncoherentRuleError(f"rule {rule.rule_id}: {exc}") from exc
                except ContradictionError as exc:
                    raise ContradictionError(
                        f"node {node_id}: {exc} (via {rule.rule_id})"
                    ) from exc
            entries.append(Contribution(rule.rule_id, child_u, seq, running))
        updates[node_id] = running
        contributions[node_id] = entries
        return running

    node_update(net.root_id())
    # Nodes outside the root's ancestry do not exist in a valid tree,
    # but evaluate any stragglers for completeness.
    for node_id in net.node_ids():
        node_update(node_id)
    return PropagationReport(interp, updates, contributions)


def derive_priors(net: Network, root_prior: float) -> dict[str, float | None]:
    """Walk priors from the root toward the leaves.

    Zero-strength rules leave the evidence prior unconstrained; those
    nodes (and everything below them) map to None.
    """
    _require_valid(net)
    if not (0.0 < root_prior < 1.0):
        raise DomainError(f"root prior must be strictly inside (0, 1), got {root_prior}")
    children = net.children()
    priors: dict[str, float | None] = {}

    def walk(node_id: str, prior: float | None) -> None:
        priors[node_id] = prior
        for rule in children[node_id]:
            if prior is None or rule.is_zero:
                walk(rule.evidence, None)
                continue
            if not rule.is_coherent:
                raise IncoherentRuleError(f"rule {rule.rule_id}: incoherent strengths")
            l_p, l_a = rule.lambda_pair()
            p_e_h, p_e_nh = recover_conditionals(l_p, l_a)
            walk(rule.evidence, p_e_h * prior + p_e_nh * (1.0 - prior))

    walk(net.root_id(), root_prior)
    return priors


@dataclass
class PosteriorReport:
    propagation: PropagationReport
    priors: dict[str, float | None]
    posteriors: dict[str, float | None]

    def render(self) -> str:
        lines = [self.propagation.render().rstrip("\n")]
        for node_id in sorted(self.priors):
            prior, post = self.priors[node_id], self.posteriors[node_id]
            if prior is None:
                lines.append(f"node {node_id}: prior unconstrained")
            else:
                lines.append(
                    f"node {node_id}: prior {prior:.4f} -> posterior {post:.4f} "
                    f"(exact {post!r})"
                )
        return "\n".join(lines) + "\n"


def posterior_report(
    net: Network,
    findings: dict[str, Finding],
    interp: Interpretation,
    root_prior: float | None = None,
) -> PosteriorReport:
    """Propagation plus prior/posterior pairs per node.

    Priors are derived from the root prior, so they are internally
    consistent by construction.  When a leaf finding supplies its own
    (prior, posterior) pair, the update is computed from the user's pair
    and a warning reports any discrepancy with the derived prior.
    """
    from .interpretations import posterior_from_update

    if root_prior is None:
        root_prior = net.root_prior
    if root_prior is None:
        raise DomainError("no root prior: pass one or set root_prior in the network file")
    report = propagate(net, findings, interp)
    priors = derive_priors(net, root_prior)
    for leaf, finding in sorted(findings.items()):
        if finding.prior is not None and priors.get(leaf) is not None:
            if abs(finding.prior - priors[leaf]) > 1e-9:
                report.warnings.append(
                    f"finding for {leaf} declares prior {finding.prior:g} but the "
                    f"net derives {priors[leaf]:.6g}; using the declared pair's update"
                )
    posteriors: dict[str, float | None] = {}
    for node_id, prior in priors.items():
        if prior is None:
            posteriors[node_id] = None
        else:
            posteriors[node_id] = posterior_from_update(interp, prior, report.updates[node_id])
    return PosteriorReport(report, priors, posteriors)
