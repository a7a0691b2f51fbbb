"""Silting objects, simple-minded collections and d-simple-minded systems for Dynkin quivers.

Objects are ``(dimension_vector, shift)`` tuples where the module sits in
cohomological degree ``-shift``.
"""

import json

from . import _core
from ._core import BudgetExceeded, TheoremViolation, UnsupportedError, root_datum

__all__ = [
    "BudgetExceeded",
    "Session",
    "TheoremViolation",
    "UnsupportedError",
    "closed_form",
    "fuss_catalan",
    "root_datum",
]


def fuss_catalan(type_label, d, variant="positive"):
    """Product-formula count, ``variant`` is ``"full"`` or ``"positive"``."""
    return int(_core.fuss_catalan_text(type_label, d, variant))


def closed_form(type_label, d, variant="positive"):
    """Per-family closed form of the same count."""
    return int(_core.closed_form_text(type_label, d, variant))


def _as_tuples(sets):
    return [[(tuple(dims), shift) for dims, shift in s] for s in sets]


class Session:
    """Derived category, orbit categories and classifier for one quiver and d."""

    def __init__(self, type_label, d=1, orientation=None, prime=0):
        self._core = _core.Session(type_label, d, list(orientation or []), prime)

    @property
    def rank(self):
        return self._core.rank

    @property
    def d(self):
        return self._core.d

    def modules(self):
        return [tuple(v) for v in self._core.modules()]

    def graded_hom(self, x, y, degree):
        return self._core.graded_hom(_obj(x), _obj(y), degree)

    def enumerate(self, kind, workers=1, budget=0):
        return _as_tuples(self._core.enumerate(kind, workers, budget))

    def check(self, kind, objects):
        """Returns ``(ok, witness)``."""
        return self._core.check(kind, [_obj(o) for o in objects])

    def verify(self, workers=1, budget=0):
        return json.loads(self._core.verify_json(workers, budget))

    def mutate(self, sequence, position, direction):
        return _as_tuples([self._core.mutate([_obj(o) for o in sequence], position, direction)])[0]

    def mu_rev(self, sequence, sign="plus"):
        return _as_tuples([self._core.mu_rev([_obj(o) for o in sequence], sign)])[0]

    def silting_to_smc(self, objects):
        return _as_tuples([self._core.silting_to_smc([_obj(o) for o in objects])])[0]

    def orbit_domain(self, ambient):
        return _as_tuples([self._core.orbit_domain(ambient)])[0]


def _obj(o):
    dims, shift = o
    return (list(dims), int(shift))
