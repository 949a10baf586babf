# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import re
from dataclasses import dataclass

import numpy as np

from ..exceptions import UserError
from .sym_matrix import SymMatrix2

_LETTER = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def _reduce(letters):
    stack = []
    for gen, exponent in letters:
        if not exponent:
            continue
        if stack and stack[-1][0] == gen:
            merged = stack[-1][1] + exponent
            stack.pop()
            if merged:
                stack.append((gen, merged))
        else:
            stack.append((gen, exponent))
    return tuple(stack)


@dataclass(frozen=True)
class GroupWord:
    """Freely reduced word: ``letters`` is a tuple of ``(generator, exponent)``
    with nonzero exponents and distinct neighbouring generators."""

    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self, "letters", _reduce((str(g), int(e)) for g, e in self.letters)
        )

    @classmethod
    def parse(cls, text):
        """Read ``b^-1*l^-1*b^2*l``; ``1`` or an empty string is the identity."""
        text = text.replace(" ", "")
        if text in ("", "1"):
            return cls()
        letters = []
        for chunk in text.split("*"):
            match = _LETTER.match(chunk)
            if not match:
                raise UserError("Cannot read %r in the group word %r." % (chunk, text))
            letters.append((match.group(1), int(match.group(2) or 1)))
        return cls(tuple(letters))

    def __mul__(self, other):
        return GroupWord(self.letters + other.letters)

    def inverse(self):
        return GroupWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def generators(self):
        return tuple(sorted({g for g, _ in self.letters}))

    def __len__(self):
        return sum(abs(e) for _, e in self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return "*".join(g if e == 1 else "%s^%d" % (g, e) for g, e in self.letters)


def word_matrix(word, images):
    """Image of ``word`` under the generator images ``{generator: SymMatrix2}``.

    Negative powers use the adjugate, so every image must have determinant 1.
    """
    missing = [g for g in word.generators() if g not in images]
    if missing:
        raise UserError("No image for generator(s) %s." % ", ".join(missing))
    result = SymMatrix2.identity()
    for gen, exponent in word.letters:
        result = result * images[gen].power(exponent)
    return result


def word_matrix_numeric(word, images):
    """Same product for numeric ``numpy`` images."""
    result = np.eye(2, dtype=complex)
    for gen, exponent in word.letters:
        result = result @ np.linalg.matrix_power(images[gen], exponent)
    return result
