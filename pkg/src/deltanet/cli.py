"""Command-line surface for conversions, combination, nets, and verification."""

from __future__ import annotations

import argparse
import json
import math
import random
import sys

from .core import (
    DELTA1,
    MYCIN_LEGACY,
    BeliefError,
    ContradictionError,
    DomainError,
    SchemaError,
    odds_of,
    parse_interpretation,
    prob_of,
)
from .interpretations import (
    elicit_from_conditionals,
    elicit_from_fifty_prior,
    g_apply,
    g_invert,
    lambda_from_update,
    update_from_lambda,
    update_from_probs,
    weight_from_probs,
)
from .combination import (
    parallel_generic,
    parallel_orig_demo,
    sequential_delta1,
    sequential_generic,
    sequential_mycin,
    RuleStrengthPair,
)
from .network import load_findings, load_network, posterior_report, propagate, validate
from .oracle import (
    build_joint,
    check_modularity,
    check_propagation,
    check_sequential,
    exact_posterior,
    random_certain_findings,
    random_network,
)
from . import sample_nets

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

VERIFY_TOL = 1e-9


def fmt(x: float) -> str:
    """Full-precision numeric formatting for machine-facing output."""
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


def fmt4(x: float) -> str:
    return format(x, ".4f")


# ---------------------------------------------------------------------------
# convert


def _convert_value(args: argparse.Namespace) -> float:
    interp = parse_interpretation(args.interp)
    frm, to, vals = args.source, args.target, args.values
    def need(n: int) -> list[float]:
        if len(vals) != n:
            raise DomainError(f"{frm} -> {to} needs {n} value(s), got {len(vals)}")
        return vals
    if frm == "prob-pair":
        posterior, prior = need(2)
        if to == "update":
            return update_from_probs(interp, posterior, prior)
        if to == "weight":
            return weight_from_probs(posterior, prior)
        if to == "lambda":
            w = weight_from_probs(posterior, prior)
            from .core import exp_weight
            return exp_weight(w)
    elif frm == "update":
        (d,) = need(1)
        if to == "lambda":
            return lambda_from_update(interp, d)
        if to == "weight":
            from .interpretations import conversion_interp
            return g_invert(conversion_interp(interp), d)
    elif frm == "lambda":
        (lam,) = need(1)
        if to == "update":
            return update_from_lambda(interp, lam)
        if to == "weight":
            if lam < 0:
                raise DomainError("likelihood ratio must be nonnegative")
            return math.log(lam) if lam > 0 else -math.inf
    elif frm == "weight":
        (w,) = need(1)
        if to == "update":
            from .interpretations import conversion_interp
            return g_apply(conversion_interp(interp), w)
        if to == "lambda":
            from .core import exp_weight
            return exp_weight(w)
    elif frm == "odds":
        (o,) = need(1)
        if to == "prob":
            return prob_of(o)
    elif frm == "prob":
        (p,) = need(1)
        if to == "odds":
            return odds_of(p)
    raise DomainError(f"unsupported conversion {frm} -> {to}")


def cmd_convert(args: argparse.Namespace) -> int:
    print(fmt(_convert_value(args)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# combine


def cmd_combine(args: argparse.Namespace) -> int:
    interp = parse_interpretation(args.interp)
    vals = args.values
    if args.mode == "parallel":
        if len(vals) < 2:
            raise DomainError("parallel combination needs at least two updates")
        result = vals[0]
        for v in vals[1:]:
            result = parallel_generic(interp, result, v)
    else:
        if len(vals) != 3:
            raise DomainError("sequential combination needs exactly (d_present, d_absent, u)")
        d_p, d_a, u = vals
        if interp.kind == "mycin-legacy":
            result = sequential_mycin(d_p, u)
        else:
            result = sequential_generic(interp, RuleStrengthPair(d_p, d_a), u)
    print(fmt(result))
    return EXIT_OK


# ---------------------------------------------------------------------------
# net


def cmd_net(args: argparse.Namespace) -> int:
    net = load_network(args.net)
    if args.action == "validate":
        problems = validate(net)
        for p in problems:
            print(p)
        if problems:
            return EXIT_FAIL
        print("ok")
        return EXIT_OK
    findings = load_findings(args.findings) if args.findings else {}
    interp = parse_interpretation(args.interp)
    if args.action == "propagate":
        report = propagate(net, findings, interp)
        sys.stdout.write(report.render())
        return EXIT_OK
    report = posterior_report(net, findings, interp, args.root_prior)
    sys.stdout.write(report.render())
    return EXIT_OK


# ---------------------------------------------------------------------------
# elicit


def _read_answers(args: argparse.Namespace, prompts: list[str]) -> list[float]:
    if args.answers:
        with open(args.answers, encoding="utf-8") as fh:
            tokens = fh.read().split()
        if len(tokens) != len(prompts):
            raise DomainError(f"answers file must contain {len(prompts)} values, got {len(tokens)}")
        values = []
        for tok in tokens:
            v = float(tok)
            if not (0.0 <= v <= 1.0):
                raise DomainError(f"probability out of range in answers file: {tok}")
            values.append(v)
        return values
    values = []
    for prompt in prompts:
        while True:
            raw = input(f"{prompt}: ").strip()
            try:
                v = float(raw)
            except ValueError:
                print("please enter a number", file=sys.stderr)
                continue
            if 0.0 <= v <= 1.0:
                values.append(v)
                break
            print("probability must be in [0, 1]", file=sys.stderr)
    return values


def cmd_elicit(args: argparse.Namespace) -> int:
    interp = parse_interpretation(args.interp)
    if args.mode == "conditionals":
        answers = _read_answers(
            args,
            ["p(E|H)", "p(E|~H)", "p(~E|H)", "p(~E|~H)"],
        )
        p_eh, p_enh, p_neh, p_nenh = answers
        d_present = elicit_from_conditionals(interp, p_eh, p_enh)
        d_absent = elicit_from_conditionals(interp, p_neh, p_nenh)
        fragment = {
            "strength": {
                "delta": [d_present, d_absent],
                "interpretation": str(interp),
            }
        }
    else:
        (posterior,) = _read_answers(args, ["posterior p(H|E) starting from prior 1/2"])
        d = elicit_from_fifty_prior(interp, posterior)
        fragment = {"update": d, "interpretation": str(interp)}
    print(json.dumps(fragment, sort_keys=True))
    return EXIT_OK


# ---------------------------------------------------------------------------
# compare


def _figure4_rows(grid: int) -> list[tuple[float, ...]]:
    from .combination import parallel_mycin
    rows = []
    first = 0.5
    for i in range(grid):
        b = -1.0 + 2.0 * i / (grid - 1)
        m = parallel_mycin(first, b)
        d = parallel_generic(DELTA1, first, b)
        rows.append((b, m, d, abs(m - d)))
    return rows


def _figure7_rows(grid: int) -> list[tuple[float, ...]]:
    rows = []
    for i in range(grid):
        u = -1.0 + 2.0 * i / (grid - 1)
        m = sequential_mycin(0.9, u)
        row = (u, m) + tuple(
            sequential_delta1(0.9, d_absent, u) for d_absent in (-0.05, -0.25, -0.9)
        )
        rows.append(row)
    return rows


def cmd_compare(args: argparse.Namespace) -> int:
    if args.grid < 11:
        raise DomainError("grid must be at least 11 points")
    if args.kind == "figure4":
        header = "second_update,mycin,delta1,abs_diff"
        rows = _figure4_rows(args.grid)
    else:
        header = "u,mycin,delta1_a05,delta1_a25,delta1_a90"
        rows = _figure7_rows(args.grid)
    lines = [header] + [",".join(fmt(v) for v in row) for row in rows]
    text = "\n".join(lines) + "\n"
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


# ---------------------------------------------------------------------------
# demo


def _demo_noncommutativity() -> None:
    prior = 0.4
    print("Historical piecewise interpretation is order dependent.")
    print(f"prior p(H) = {fmt4(prior)}")
    p_plus = parallel_orig_demo(prior, [0.7])
    p_plus_minus = parallel_orig_demo(prior, [0.7, -0.5])
    print(f"apply +0.7 first: p(H|E+) = {fmt4(p_plus)} (exact {fmt(p_plus)})")
    print(f"then -0.5:        p(H|E+E-) = {fmt4(p_plus_minus)} (exact {fmt(p_plus_minus)})")
    p_minus = parallel_orig_demo(prior, [-0.5])
    p_minus_plus = parallel_orig_demo(prior, [-0.5, 0.7])
    print(f"apply -0.5 first: p(H|E-) = {fmt4(p_minus)} (exact {fmt(p_minus)})")
    print(f"then +0.7:        p(H|E-E+) = {fmt4(p_minus_plus)} (exact {fmt(p_minus_plus)})")
    print("same evidence, different order, different posterior.")


def _demo_extrovert() -> None:
    from .combination import parallel_mycin
    net = sample_nets.extrovert_network()
    both = sample_nets.extrovert_findings_both()
    back_only = sample_nets.extrovert_findings_backpacking_only()
    m_par = parallel_mycin(0.8, -0.5)
    m_seq = sequential_mycin(0.4, m_par)
    print("legacy calculus:")
    print(f"  parallel(0.8, -0.5) = {fmt4(m_par)} (exact {fmt(m_par)})")
    print(f"  sequential(0.4, {fmt4(m_par)}) = {fmt4(m_seq)} (exact {fmt(m_seq)})")
    d_par = parallel_generic(DELTA1, 0.8, -0.5)
    d_seq = sequential_delta1(0.4, -0.4, d_par)
    print("delta1 calculus:")
    print(f"  parallel(0.8, -0.5) = {fmt4(d_par)} (exact {fmt(d_par)})")
    print(f"  sequential((0.4, -0.4), {fmt4(d_par)}) = {fmt4(d_seq)} (exact {fmt(d_seq)})")
    legacy_root = propagate(net, both, MYCIN_LEGACY).updates["social_work"]
    delta_root = propagate(net, both, DELTA1).updates["social_work"]
    print(f"net propagation, both findings: legacy {fmt4(legacy_root)}, delta1 {fmt4(delta_root)}")
    legacy_neg = propagate(net, back_only, MYCIN_LEGACY).updates["social_work"]
    delta_neg = propagate(net, back_only, DELTA1).updates["social_work"]
    print(
        f"net propagation, backpacking only: legacy {fmt4(legacy_neg)}, "
        f"delta1 {fmt4(delta_neg)} (legacy ignores the absence link)"
    )


def _demo_divergence_limit() -> None:
    from .combination import parallel_mycin
    eps = 1e-6
    a = 1.0 - eps
    b = -1.0 + eps / 2.0
    m = parallel_mycin(a, b)
    d = parallel_generic(DELTA1, a, b)
    print("where the two parallel functions diverge the most:")
    print(f"a = 1 - {eps:g}, b = -1 + {eps / 2:g}")
    print(f"legacy  -> {fmt4(m)} (exact {fmt(m)}), limit -0.5")
    print(f"delta1  -> {fmt4(d)} (exact {fmt(d)}), limit -1/3 = {fmt4(-1 / 3)}")


def cmd_demo(args: argparse.Namespace) -> int:
    {
        "noncommutativity": _demo_noncommutativity,
        "extrovert": _demo_extrovert,
        "divergence-limit": _demo_divergence_limit,
    }[args.name]()
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args: argparse.Namespace) -> int:
    if args.count == 0:
        print("warning: count is 0, vacuous pass")
        return EXIT_OK
    worst_prop = 0.0
    worst_seq = 0.0
    worst_mod = 0.0
    worst_legacy = 0.0
    for i in range(args.count):
        rng = random.Random(f"{args.seed}:{i}")
        net, root_prior = random_network(rng)
        findings = random_certain_findings(rng, net)
        worst_prop = max(worst_prop, check_propagation(net, findings, root_prior))
        if args.legacy:
            evidence = {k: f.update == 1.0 for k, f in findings.items()}
            jm = build_joint(net, root_prior)
            rep = posterior_report(net, findings, MYCIN_LEGACY, root_prior)
            root = net.root_id()
            got = rep.posteriors[root]
            expected = exact_posterior(jm, evidence, root) if root not in evidence else (
                1.0 if evidence[root] else 0.0
            )
            worst_legacy = max(worst_legacy, abs(got - expected))
        # two-link chain with an uncertain observation
        l_he = rng.uniform(1.5, 20.0)
        l_hnote = rng.uniform(0.05, 0.9)
        obs = (rng.uniform(0.55, 0.95), rng.uniform(0.05, 0.45))
        worst_seq = max(worst_seq, check_sequential(l_he, l_hnote, obs, rng.uniform(0.1, 0.9)))
        # two sibling leaves under one hypothesis
        while True:
            net2, rp2 = random_network(rng, max_nodes=3)
            if len(net2.nodes) == 3 and len(net2.leaf_ids()) == 2:
                break
        jm2 = build_joint(net2, rp2)
        e1, e2 = sorted(net2.leaf_ids())
        worst_mod = max(worst_mod, check_modularity(jm2, net2.root_id(), e1, e2))
    print(f"propagation max deviation: {fmt(worst_prop)}")
    print(f"sequential max deviation:  {fmt(worst_seq)}")
    print(f"modularity max deviation:  {fmt(worst_mod)}")
    if args.legacy:
        print(f"legacy max deviation:      {fmt(worst_legacy)} (informational)")
    ok = max(worst_prop, worst_seq, worst_mod) < VERIFY_TOL
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="deltanet", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert between belief representations")
    p.add_argument("--from", dest="source", required=True,
                   choices=["prob-pair", "update", "lambda", "weight", "odds", "prob"])
    p.add_argument("--to", dest="target", required=True,
                   choices=["update", "lambda", "weight", "odds", "prob"])
    p.add_argument("--interp", default="delta1")
    p.add_argument("values", nargs="+", type=float)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("combine", help="parallel or sequential combination")
    p.add_argument("mode", choices=["parallel", "sequential"])
    p.add_argument("--interp", default="delta1")
    p.add_argument("values", nargs="+", type=float)
    p.set_defaults(func=cmd_combine)

    p = sub.add_parser("net", help="validate or evaluate a delta-net/1 network")
    p.add_argument("action", choices=["validate", "propagate", "posteriors"])
    p.add_argument("net")
    p.add_argument("--findings")
    p.add_argument("--interp", default="delta1")
    p.add_argument("--root-prior", type=float, default=None)
    p.set_defaults(func=cmd_net)

    p = sub.add_parser("elicit", help="turn elicited probabilities into rule strengths")
    p.add_argument("--mode", required=True, choices=["conditionals", "fifty-prior"])
    p.add_argument("--interp", default="delta1")
    p.add_argument("--answers", help="file of whitespace-separated answers for scripted runs")
    p.set_defaults(func=cmd_elicit)

    p = sub.add_parser("compare", help="emit comparison grids as CSV")
    p.add_argument("kind", choices=["figure4", "figure7"])
    p.add_argument("--grid", type=int, default=201)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("demo", help="printed walkthroughs of the worked examples")
    p.add_argument("name", choices=["noncommutativity", "extrovert", "divergence-limit"])
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("verify", help="certify the engine against exact enumeration")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--legacy", action="store_true",
                   help="also report (but do not fail on) legacy-mode deviations")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ContradictionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BeliefError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
