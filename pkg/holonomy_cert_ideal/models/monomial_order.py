# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

from dataclasses import dataclass

from holonomy_cert_base.exceptions import UserError
from holonomy_cert_base.models.poly import order_variables

try:
    from sympy import QQ, Symbol
    from sympy.polys.orderings import grevlex, lex
    from sympy.polys.rings import ring
except ImportError:  # pragma: no cover
    pass

KINDS = ("lex", "grevlex")


@dataclass(frozen=True)
class MonomialOrder:
    """Lexicographic or graded reverse lexicographic order.

    ``variables`` lists the variables by priority, largest first; exponent
    vectors handled by the order are dense over exactly these variables.
    """

    kind: str
    variables: tuple

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UserError(
                "Unknown monomial order %r; expected one of %s."
                % (self.kind, ", ".join(KINDS))
            )
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise UserError("Monomial order lists a variable twice.")

    @classmethod
    def parse(cls, kind, variables):
        """From CLI text: ``("lex", "z,x,y")``."""
        if isinstance(variables, str):
            variables = [v.strip() for v in variables.split(",") if v.strip()]
        return cls(kind, tuple(variables))

    @classmethod
    def elimination(cls, drop, keep):
        """Lex order with the variables of ``drop`` above those of ``keep``."""
        drop = order_variables(drop)
        keep = tuple(v for v in order_variables(keep) if v not in drop)
        return cls("lex", drop + keep)

    def key(self, exponents):
        """Sort key of an exponent vector; larger key means larger monomial."""
        if self.kind == "lex":
            return tuple(exponents)
        return (sum(exponents), tuple(-e for e in reversed(exponents)))

    def is_elimination_order(self, drop):
        drop = set(drop)
        if not drop:
            return True
        if self.kind != "lex":
            return False
        head = self.variables[: len(drop)]
        return set(head) == drop

    def extended(self, extra):
        """Same order with ``extra`` variables appended at the lowest
        priority."""
        extra = tuple(v for v in extra if v not in self.variables)
        if not extra:
            return self
        return MonomialOrder(self.kind, self.variables + order_variables(extra))

    def ring(self):
        """The sympy polynomial ring over QQ realising this order."""
        gens = [Symbol(v) for v in self.variables]
        return ring(gens, QQ, lex if self.kind == "lex" else grevlex)[0]

    def __str__(self):
        return "%s(%s)" % (self.kind, " > ".join(self.variables))


# z > x > y > w > t > s for the entry-equation system
DEFAULT_ELIMINATION_ORDER = MonomialOrder("lex", ("z", "x", "y", "w", "t", "s"))
