"""Built-in example networks used by the demos and shipped net files."""

from __future__ import annotations

from .core import DELTA1
from .network import Finding, Network, network_from_dict

EXTROVERT_DOC = {
    "format": "delta-net/1",
    "nodes": [
        {"id": "parties", "description": "likes to go to parties"},
        {"id": "backpacking", "description": "likes solo backpacking trips"},
        {"id": "extrovert", "description": "is an extrovert"},
        {"id": "social_work", "description": "does some type of social work"},
    ],
    "rules": [
        {
            "evidence": "parties",
            "hypothesis": "extrovert",
            "strength": {"delta": [0.8, -0.3], "interpretation": "delta1"},
        },
        {
            "evidence": "backpacking",
            "hypothesis": "extrovert",
            "strength": {"delta": [-0.5, 0.25], "interpretation": "delta1"},
        },
        {
            "evidence": "extrovert",
            "hypothesis": "social_work",
            "strength": {"delta": [0.4, -0.4], "interpretation": "delta1"},
        },
    ],
    "root_prior": 0.5,
}


def extrovert_network() -> Network:
    return network_from_dict(EXTROVERT_DOC)


def extrovert_findings_both() -> dict[str, Finding]:
    return {
        "parties": Finding(update=1.0, interpretation=DELTA1),
        "backpacking": Finding(update=1.0, interpretation=DELTA1),
    }


def extrovert_findings_backpacking_only() -> dict[str, Finding]:
    return {"backpacking": Finding(update=1.0, interpretation=DELTA1)}


SINGLE_RULE_DOC = {
    "format": "delta-net/1",
    "nodes": [
        {"id": "hypothesis"},
        {"id": "evidence"},
    ],
    "rules": [
        {
            "evidence": "evidence",
            "hypothesis": "hypothesis",
            "strength": {"lambda": [3.0, 1.0 / 3.0]},
        },
    ],
    "root_prior": 0.5,
}


def single_rule_network() -> Network:
    return network_from_dict(SINGLE_RULE_DOC)


CHAIN_DOC = {
    "format": "delta-net/1",
    "nodes": [
        {"id": "disease", "description": "patient has the disease"},
        {"id": "symptom", "description": "symptom present"},
        {"id": "reported", "description": "patient reports the symptom"},
    ],
    "rules": [
        {
            "evidence": "symptom",
            "hypothesis": "disease",
            "strength": {"conditionals": [0.75, 0.25]},
        },
        {
            "evidence": "reported",
            "hypothesis": "symptom",
            "strength": {"conditionals": [0.9, 0.2]},
        },
    ],
    "root_prior": 0.3,
}


def chain_network() -> Network:
    return network_from_dict(CHAIN_DOC)
