# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).


class HolonomyCertError(Exception):
    """Root of every error raised by the holonomy_cert packages."""


class UserError(HolonomyCertError):
    """The caller supplied input that cannot be used."""


class DomainError(UserError, ValueError):
    """An operation was called outside of its domain of definition."""


class ValidationError(HolonomyCertError):
    """An exact verification failed."""


class ResourceCapError(HolonomyCertError):
    def __init__(self, cap, limit, observed):
        self.cap = cap
        self.limit = limit
        self.observed = observed
        super().__init__(
            "Groebner computation exceeded %s: limit %s, reached %s."
            % (cap, limit, observed)
        )
