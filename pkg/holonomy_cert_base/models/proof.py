# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from ..exceptions import ValidationError
from .poly import _SparsePoly
from .rational import rational_str

_logger = logging.getLogger(__name__)


def serialize_value(value):
    """JSON-ready form: rationals as ``"num/den"``, polynomials as text."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, float):
        return value
    if isinstance(value, _SparsePoly):
        return str(value)
    if isinstance(value, dict):
        return {str(k): serialize_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [serialize_value(v) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    if hasattr(value, "value"):
        return value.value
    return str(value)


@dataclass(frozen=True)
class Fact:
    statement: str
    method: str
    holds: bool
    exact_values: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "statement": self.statement,
            "method": self.method,
            "holds": self.holds,
            "exact_values": serialize_value(self.exact_values),
        }


@dataclass
class ProofRecord:
    """Ordered list of checked facts behind one certifying operation."""

    kind: str
    facts: list = field(default_factory=list)

    def check(self, statement, method, holds, **exact_values):
        fact = Fact(statement, method, bool(holds), exact_values)
        self.facts.append(fact)
        if fact.holds:
            _logger.debug("%s: verified %s", self.kind, statement)
        else:
            _logger.warning("%s: check failed: %s", self.kind, statement)
        return fact.holds

    def extend(self, other):
        self.facts.extend(other.facts)
        return self

    @property
    def holds(self):
        return all(f.holds for f in self.facts)

    def failures(self):
        return [f for f in self.facts if not f.holds]

    def require(self):
        """Raise :class:`ValidationError` on the first failed fact."""
        failures = self.failures()
        if failures:
            raise ValidationError(
                "%s: %s does not hold (%s)."
                % (self.kind, failures[0].statement, failures[0].method)
            )
        return self

    def to_json(self):
        return [fact.to_json() for fact in self.facts]
