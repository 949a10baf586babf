# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import ast
import json
import logging
import os
from dataclasses import dataclass, field
from functools import lru_cache

from holonomy_cert_base.exceptions import UserError
from holonomy_cert_base.models.proof import serialize_value

_logger = logging.getLogger(__name__)

SCHEMA = 1
REQUIRED_KEYS = ("schema", "kind", "inputs", "facts", "verdict")


@lru_cache(maxsize=None)
def tool_version():
    """Version declared in this package's ``__manifest__.py``."""
    path = os.path.join(os.path.dirname(os.path.dirname(__file__)), "__manifest__.py")
    with open(path, encoding="utf-8") as handle:
        return ast.literal_eval(handle.read())["version"]


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable outcome of one command.

    ``inputs`` and ``facts`` are JSON-ready: re-running ``kind`` with
    ``inputs`` reproduces ``facts`` exactly.
    """

    kind: str
    inputs: dict
    facts: list
    verdict: str
    result: dict = field(default_factory=dict, compare=False)
    tool_version: str = field(default_factory=tool_version, compare=False)
    deterministic_seed: int = 0

    @classmethod
    def from_records(cls, kind, inputs, records, verdict, result=None, seed=0):
        facts = []
        for record in records:
            facts.extend(record.to_json())
        return cls(
            kind,
            serialize_value(inputs),
            facts,
            str(verdict),
            serialize_value(result or {}),
            deterministic_seed=seed,
        )

    @property
    def holds(self):
        return all(fact["holds"] for fact in self.facts)

    def same_outcome(self, other):
        return self.facts == other.facts and self.verdict == other.verdict

    def to_json(self):
        return {
            "schema": SCHEMA,
            "kind": self.kind,
            "inputs": self.inputs,
            "facts": self.facts,
            "verdict": self.verdict,
            "result": self.result,
            "tool_version": self.tool_version,
            "deterministic_seed": self.deterministic_seed,
        }

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict):
            raise UserError("A certificate must be a JSON object, got %s." % type(data).__name__)
        missing = [key for key in REQUIRED_KEYS if key not in data]
        if missing:
            raise UserError("Certificate is missing %s." % ", ".join(missing))
        if data["schema"] != SCHEMA:
            raise UserError(
                "Unsupported certificate schema %r; this version reads schema %d."
                % (data["schema"], SCHEMA)
            )
        if not isinstance(data["inputs"], dict) or not isinstance(data["facts"], list):
            raise UserError("Certificate inputs must be an object and facts a list.")
        return cls(
            data["kind"],
            data["inputs"],
            data["facts"],
            data["verdict"],
            data.get("result", {}),
            data.get("tool_version", tool_version()),
            data.get("deterministic_seed", 0),
        )


def dump_certificates(certificates):
    """One certificate as an object, several as a list."""
    payload = [c.to_json() for c in certificates]
    if len(payload) == 1:
        payload = payload[0]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def load_certificates(text):
    try:
        data = json.loads(text)
    except ValueError as err:
        raise UserError("Certificate file is not valid JSON: %s." % err) from err
    if isinstance(data, dict):
        data = [data]
    certificates = [Certificate.from_json(item) for item in data]
    _logger.debug("Loaded %d certificates", len(certificates))
    return certificates
