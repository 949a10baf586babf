# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import logging
import os
from dataclasses import dataclass, field, replace
from fractions import Fraction

from holonomy_cert_base.exceptions import UserError
from holonomy_cert_base.models.rational import to_rational
from holonomy_cert_ideal.models.groebner import GroebnerCaps

_logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "text")
MAX_PAIRS_ENV = "HOLONOMY_CERT_MAX_PAIRS"
DEFAULT_TOLERANCES = {
    "enclosure": Fraction(1, 10 ** 12),
    "witness": Fraction(1, 10 ** 6),
    "bound": Fraction(1, 10 ** 4),
}


def parse_tolerance(text):
    """``key=value`` with a known key and a positive ``p/q`` or integer."""
    key, sep, value = text.partition("=")
    key = key.strip()
    if not sep:
        raise UserError("Tolerance %r must be written key=value." % text)
    if key not in DEFAULT_TOLERANCES:
        raise UserError(
            "Unknown tolerance %r; expected one of %s." % (key, ", ".join(DEFAULT_TOLERANCES))
        )
    if "." in value:
        raise UserError("Tolerance %s must be an integer or p/q, got %r." % (key, value))
    rational = to_rational(value)
    if rational <= 0:
        raise UserError("Tolerance %s must be positive, got %s." % (key, value))
    return key, rational


@dataclass(frozen=True)
class CliConfig:
    jobs: int = 1
    tolerances: dict = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    output: str = None
    format: str = "text"
    seed: int = 0
    caps: GroebnerCaps = field(default_factory=GroebnerCaps)

    def __post_init__(self):
        if isinstance(self.jobs, bool) or not isinstance(self.jobs, int) or self.jobs < 1:
            raise UserError("--jobs must be a positive integer, got %r." % (self.jobs,))
        if self.format not in FORMATS:
            raise UserError(
                "Unknown output format %r; expected one of %s." % (self.format, ", ".join(FORMATS))
            )
        unknown = set(self.tolerances) - set(DEFAULT_TOLERANCES)
        if unknown:
            raise UserError("Unknown tolerance(s) %s." % ", ".join(sorted(unknown)))
        merged = dict(DEFAULT_TOLERANCES)
        merged.update(self.tolerances)
        object.__setattr__(self, "tolerances", merged)

    def tolerance(self, key):
        return self.tolerances[key]

    @classmethod
    def from_env(cls, environ=None, **overrides):
        """Defaults, then ``HOLONOMY_CERT_MAX_PAIRS``, then ``overrides``."""
        environ = os.environ if environ is None else environ
        values = {}
        raw = environ.get(MAX_PAIRS_ENV)
        if raw is not None:
            raw = raw.strip()
            if not raw.isdigit() or int(raw) < 1:
                raise UserError(
                    "%s must be a positive integer such as 2000, got %r." % (MAX_PAIRS_ENV, raw)
                )
            values["caps"] = GroebnerCaps(max_pairs=int(raw))
            _logger.debug("Groebner pair cap %s from the environment", raw)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def with_tolerances(self, items):
        """A copy with ``key=value`` overrides applied."""
        tolerances = dict(self.tolerances)
        tolerances.update(parse_tolerance(item) for item in items or ())
        return replace(self, tolerances=tolerances)
