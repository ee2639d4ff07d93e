"""End-to-end acceptance checks.

Each test covers one numbered criterion and prints a single PASS/FAIL
line so the run log doubles as an acceptance report.
"""

import math
import random

import pytest

from deltanet.core import CF, DELTA1, MYCIN_LEGACY, ORIG, ContradictionError, deltan
from deltanet.combination import (
    RuleStrengthPair,
    parallel_generic,
    parallel_mycin,
    parallel_orig_demo,
    sequential_delta1,
    sequential_generic,
    sequential_mycin,
)
from deltanet.interpretations import elicit_from_fifty_prior
from deltanet.network import (
    load_findings,
    load_network,
    posterior_report,
    propagate,
    save_network,
)
from deltanet.oracle import (
    JointModel,
    check_modularity,
    check_propagation,
    check_sequential,
    random_certain_findings,
    random_network,
)

SCHEMES = [MYCIN_LEGACY, DELTA1, deltan(3), deltan(99), CF]

# frozen output of the 10,001-point scan in test_a6; recomputing it from an
# independent script gives this same maximum
A6_GOLDEN_MAX = 0.10102050947093394


def _report(capsys, cid, ok, detail):
    with capsys.disabled():
        print(f"{cid} {'PASS' if ok else 'FAIL'} - {detail}")


def test_a1_order_dependence_of_original_interpretation(capsys):
    plus_minus = parallel_orig_demo(0.4, [0.7, -0.5])
    minus_plus = parallel_orig_demo(0.4, [-0.5, 0.7])
    ok = abs(plus_minus - 0.41) < 0.005 and abs(minus_plus - 0.76) < 0.005
    _report(capsys, "A1", ok,
            f"original interpretation posteriors {plus_minus:.4f} / {minus_plus:.4f}")
    assert ok


def test_a2_extrovert_worked_example(capsys):
    checks = [
        abs(parallel_mycin(0.8, -0.5) - 0.6) < 1e-15,
        abs(sequential_mycin(0.4, 0.6) - 0.24) < 1e-15,
        abs(parallel_generic(DELTA1, 0.8, -0.5) - 0.5) < 1e-12,
        abs(sequential_delta1(0.4, -0.4, 0.5) - 0.2) < 1e-12,
        sequential_mycin(0.4, parallel_mycin(0.0, -0.5)) == 0.0,
        abs(sequential_delta1(0.4, -0.4, parallel_generic(DELTA1, 0.0, -0.5))
            - (-0.2)) < 1e-12,
    ]
    ok = all(checks)
    _report(capsys, "A2", ok, "legacy 0.6/0.24/0 and symmetric 0.5/0.2/-0.2")
    assert ok


def test_a3_cf_map_reproduces_legacy_parallel(capsys):
    worst = 0.0
    n = 200
    for i in range(n):
        a = -0.995 + 2 * 0.995 * i / (n - 1)
        for j in range(n):
            b = -0.995 + 2 * 0.995 * j / (n - 1)
            worst = max(worst, abs(parallel_generic(CF, a, b) - parallel_mycin(a, b)))
    ok = worst < 1e-9
    _report(capsys, "A3", ok, f"max |cf - legacy| on 200x200 grid = {worst:.3e}")
    assert ok


def test_a4_parallel_combination_axioms(capsys):
    rng = random.Random(4)
    failures = []
    for interp in SCHEMES:
        for _ in range(2000):
            a = rng.uniform(-0.999, 0.999)
            b = rng.uniform(-0.999, 0.999)
            c = rng.uniform(-0.999, 0.999)
            tol = 1e-6 if max(abs(a), abs(b), abs(c)) > 0.999 else 1e-9
            ab = parallel_generic(interp, a, b)
            if abs(ab - parallel_generic(interp, b, a)) > tol:
                failures.append((interp, "commutativity", a, b))
            lhs = parallel_generic(interp, ab, c)
            rhs = parallel_generic(interp, a, parallel_generic(interp, b, c))
            if abs(lhs - rhs) > tol:
                failures.append((interp, "associativity", a, b, c))
            if abs(parallel_generic(interp, a, 0.0) - a) > tol:
                failures.append((interp, "identity", a))
            if abs(parallel_generic(interp, a, -a)) > tol:
                failures.append((interp, "inverse", a))
            lo, hi = min(b, c), max(b, c)
            if parallel_generic(interp, a, hi) < parallel_generic(interp, a, lo) - 1e-9:
                failures.append((interp, "monotonicity", a, lo, hi))
        # extreme rules are exact, and full conflict is an error
        if parallel_generic(interp, 1.0, b) != 1.0 or parallel_generic(interp, -1.0, b) != -1.0:
            failures.append((interp, "extremes"))
        try:
            parallel_generic(interp, 1.0, -1.0)
            failures.append((interp, "conflict not raised"))
        except ContradictionError:
            pass
    ok = not failures
    _report(capsys, "A4", ok,
            f"axioms on 10,000 tuples across 5 schemes, {len(failures)} failure(s)")
    assert ok, failures[:5]


def test_a5_divergence_limit(capsys):
    a = 1.0 - 1e-6
    b = -1.0 + 5e-7
    m = parallel_mycin(a, b)
    d = parallel_generic(DELTA1, a, b)
    ok = abs(m - (-0.5)) < 1e-3 and abs(d - (-1.0 / 3.0)) < 1e-3
    _report(capsys, "A5", ok, f"near-conflict legacy {m:.6f} vs symmetric {d:.6f}")
    assert ok


def test_a6_largest_disagreement_with_first_operand_half(capsys):
    n = 10001
    worst = 0.0
    for i in range(n):
        b = -1.0 + 2.0 * i / (n - 1)
        worst = max(worst, abs(parallel_mycin(0.5, b) - parallel_generic(DELTA1, 0.5, b)))
    at_minus_075 = (parallel_mycin(0.5, -0.75), parallel_generic(DELTA1, 0.5, -0.75))
    ok = (
        abs(worst - A6_GOLDEN_MAX) < 1e-12
        and abs(at_minus_075[0] - (-0.5)) < 1e-12
        and abs(at_minus_075[1] - (-0.4)) < 1e-12
    )
    _report(capsys, "A6", ok,
            f"max disagreement {worst:.17g}, at -0.75 -> {at_minus_075}")
    assert ok


def test_a7_sequential_boundary_values_exact(capsys):
    rng = random.Random(7)
    ok = True
    for _ in range(1000):
        sign = rng.choice([1.0, -1.0])
        pair = RuleStrengthPair(sign * rng.uniform(1e-6, 1.0 - 1e-6),
                                -sign * rng.uniform(1e-6, 1.0 - 1e-6))
        for interp in (DELTA1, CF, deltan(3)):
            if sequential_generic(interp, pair, 1.0) != pair.on_present:
                ok = False
            if sequential_generic(interp, pair, -1.0) != pair.on_absent:
                ok = False
            if sequential_generic(interp, pair, 0.0) != 0.0:
                ok = False
        if sequential_delta1(pair.on_present, pair.on_absent, 1.0) != pair.on_present:
            ok = False
    _report(capsys, "A7", ok, "u in {1,-1,0} returns the declared strengths exactly")
    assert ok


def test_a8_engine_matches_exact_enumeration(capsys):
    worst_prop = 0.0
    for i in range(100):
        rng = random.Random(800 + i)
        net, root_prior = random_network(rng)
        findings = random_certain_findings(rng, net)
        worst_prop = max(worst_prop, check_propagation(net, findings, root_prior))

    rng = random.Random(801)
    worst_seq = 0.0
    for _ in range(100):
        l_he = rng.uniform(1.5, 20.0)
        l_hnote = rng.uniform(0.05, 0.9)
        obs = (rng.uniform(0.55, 0.95), rng.uniform(0.05, 0.45))
        worst_seq = max(worst_seq, check_sequential(l_he, l_hnote, obs, rng.uniform(0.1, 0.9)))

    from deltanet.network import network_from_dict
    ci_net = network_from_dict({
        "format": "delta-net/1",
        "nodes": [{"id": "h"}, {"id": "e1"}, {"id": "e2"}],
        "rules": [
            {"evidence": "e1", "hypothesis": "h", "strength": {"conditionals": [0.6, 0.2]}},
            {"evidence": "e2", "hypothesis": "h", "strength": {"conditionals": [0.7, 0.4]}},
        ],
    })
    from deltanet.oracle import build_joint
    ci_dev = check_modularity(build_joint(ci_net, 0.5), "h", "e1", "e2")

    table = {}
    joint_given_h = {(True, True): 0.4, (True, False): 0.1,
                     (False, True): 0.1, (False, False): 0.4}
    joint_given_nh = {(True, True): 0.05, (True, False): 0.25,
                      (False, True): 0.25, (False, False): 0.45}
    for (e1, e2), p in joint_given_h.items():
        table[(True, e1, e2)] = 0.5 * p
    for (e1, e2), p in joint_given_nh.items():
        table[(False, e1, e2)] = 0.5 * p
    corr_dev = check_modularity(JointModel(["h", "e1", "e2"], table), "h", "e1", "e2")

    ok = worst_prop < 1e-9 and worst_seq < 1e-9 and ci_dev < 1e-9 and corr_dev > 0.01
    _report(capsys, "A8", ok,
            f"propagation {worst_prop:.2e}, chains {worst_seq:.2e}, "
            f"independence {ci_dev:.2e}, correlated counterexample {corr_dev:.3f}")
    assert ok


def test_a9_high_order_map_approaches_max_magnitude(capsys):
    rng = random.Random(9)
    interp = deltan(99)
    worst = 0.0
    count = 0
    while count < 1000:
        a = rng.uniform(-0.99, 0.99)
        b = rng.uniform(-0.99, 0.99)
        if abs(abs(a) - abs(b)) <= 0.05:
            continue
        count += 1
        dominant = a if abs(a) > abs(b) else b
        worst = max(worst, abs(parallel_generic(interp, a, b) - dominant))
    ok = worst < 0.02
    _report(capsys, "A9", ok, f"max deviation from dominant operand {worst:.4f}")
    assert ok


def test_a10_fifty_prior_elicitation_is_linear(capsys):
    worst = 0.0
    n = 1001
    for i in range(n):
        p = i / (n - 1)
        worst = max(worst, abs(elicit_from_fifty_prior(DELTA1, p) - (2.0 * p - 1.0)))
    ok = worst < 1e-12
    _report(capsys, "A10", ok, f"max |elicited - (2p-1)| = {worst:.2e}")
    assert ok


def test_a11_shipped_nets_round_trip_byte_identical(capsys, tmp_path):
    cases = [
        ("nets/extrovert.json", "nets/extrovert_both_findings.json", 0.5),
        ("nets/extrovert.json", "nets/extrovert_backpacking_findings.json", 0.5),
        ("nets/single_rule.json", None, None),
        ("nets/chain.json", "nets/chain_reported_findings.json", None),
    ]
    ok = True
    for interp in (DELTA1, MYCIN_LEGACY):
        for net_path, findings_path, prior_override in cases:
            net = load_network(net_path)
            findings = load_findings(findings_path) if findings_path else {}
            before = posterior_report(net, findings, interp, prior_override).render()
            copy_path = tmp_path / "roundtrip.json"
            save_network(net, str(copy_path))
            reloaded = load_network(str(copy_path))
            after = posterior_report(reloaded, findings, interp, prior_override).render()
            if before.encode() != after.encode():
                ok = False
            if propagate(net, findings, interp).render() != propagate(
                    reloaded, findings, interp).render():
                ok = False
    _report(capsys, "A11", ok, "save/reload reports byte-identical for all shipped nets")
    assert ok
