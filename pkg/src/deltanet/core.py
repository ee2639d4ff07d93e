"""Value types and numeric conventions shared by the whole engine.

Beliefs appear in four spaces: probability [0,1], odds [0, +inf],
likelihood ratio [0, +inf], and weight of evidence (log likelihood
ratio) [-inf, +inf].  Updates live in [-1,1] and are always tagged
with an interpretation.  Infinities are real ``math.inf`` values, not
sentinels; the one undefined case (opposite certain evidence) raises
``ContradictionError`` instead of producing NaN.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

INF = math.inf

# Default absolute comparison tolerance; near the +-1 / 0 / 1 boundaries
# the logit map amplifies error, so boundary-adjacent checks use the
# looser value.
ABS_TOL = 1e-9
BOUNDARY_TOL = 1e-6


class BeliefError(Exception):
    """Base class for all engine errors."""


class DomainError(BeliefError):
    """An input value is outside its legal range."""


class ContradictionError(BeliefError):
    """Certain evidence for and against the same statement met."""


class IncoherentRuleError(BeliefError):
    """A rule strength pair violates the convex-combination constraint."""


class UnsupportedInterpretationError(BeliefError):
    """The requested operation is not defined for this interpretation."""


class SchemaError(BeliefError):
    """A delta-net/1 document failed structural validation."""


def check_probability(p: float, name: str = "probability") -> float:
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"{name} must be in [0, 1], got {p!r}")
    return float(p)


def check_update(d: float, name: str = "update") -> float:
    if not (-1.0 <= d <= 1.0):
        raise DomainError(f"{name} must be in [-1, 1], got {d!r}")
    return float(d)


def check_odds(o: float, name: str = "odds") -> float:
    if math.isnan(o) or o < 0.0:
        raise DomainError(f"{name} must be nonnegative, got {o!r}")
    return float(o)


def odds_of(p: float) -> float:
    """Odds p/(1-p); +inf at p = 1."""
    check_probability(p)
    if p == 1.0:
        return INF
    return p / (1.0 - p)


def prob_of(o: float) -> float:
    """Inverse of odds_of: o/(1+o); 1 at +inf."""
    check_odds(o)
    if math.isinf(o):
        return 1.0
    return o / (1.0 + o)


def add_weights(a: float, b: float) -> float:
    """Add two weights of evidence.

    Opposite infinities mean a statement is simultaneously proved and
    disproved, which is the one undefined combination.
    """
    if math.isinf(a) and math.isinf(b) and (a > 0) != (b > 0):
        raise ContradictionError("conflicting certain evidence: +inf and -inf weights")
    if math.isinf(a):
        return a
    if math.isinf(b):
        return b
    return a + b


def exp_weight(w: float) -> float:
    """exp() that saturates to +inf instead of overflowing."""
    if w > 709.0:
        return INF
    return math.exp(w)


@dataclass(frozen=True)
class Interpretation:
    """One member of the certainty-factor family.

    kind is one of "delta1", "deltan", "cf", "mycin-legacy", "orig".
    n is set only for deltan and must be an odd positive integer so
    that the generating map stays odd-symmetric.
    """

    kind: str
    n: int | None = None

    _KINDS = ("delta1", "deltan", "cf", "mycin-legacy", "orig")

    def __post_init__(self) -> None:
        if self.kind not in self._KINDS:
            raise DomainError(f"unknown interpretation kind {self.kind!r}")
        if self.kind == "deltan":
            if not isinstance(self.n, int) or self.n < 1 or self.n % 2 == 0:
                raise DomainError(f"deltan requires an odd positive integer n, got {self.n!r}")
        elif self.n is not None:
            raise DomainError(f"n is only valid for deltan, not {self.kind!r}")

    @property
    def is_probabilistic(self) -> bool:
        """True when the interpretation has a generating map of its own."""
        return self.kind in ("delta1", "deltan", "cf")

    def __str__(self) -> str:
        if self.kind == "deltan":
            return f"deltan({self.n})"
        return self.kind


DELTA1 = Interpretation("delta1")
CF = Interpretation("cf")
MYCIN_LEGACY = Interpretation("mycin-legacy")
ORIG = Interpretation("orig")


def deltan(n: int) -> Interpretation:
    return Interpretation("deltan", n)


def parse_interpretation(text: str) -> Interpretation:
    """Parse a CLI/file spelling: delta1, cf, mycin, mycin-legacy, orig, deltan:N."""
    t = text.strip().lower()
    if t == "delta1":
        return DELTA1
    if t == "cf":
        return CF
    if t in ("mycin", "mycin-legacy"):
        return MYCIN_LEGACY
    if t == "orig":
        return ORIG
    for prefix in ("deltan:", "deltan-"):
        if t.startswith(prefix):
            try:
                return deltan(int(t[len(prefix):]))
            except ValueError:
                break
    if t.startswith("deltan(") and t.endswith(")"):
        try:
            return deltan(int(t[7:-1]))
        except ValueError:
            pass
    raise DomainError(f"cannot parse interpretation {text!r}")
