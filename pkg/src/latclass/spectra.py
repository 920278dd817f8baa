"""Per-element classification: points, prime and irreducible elements.

The binary classes are decided by exhaustive pair checks.  The
"completely" variants use the finite-lattice fast path (binary class plus
not-bottom / not-top); an independent subset-enumeration oracle is
provided so the fast path can be asserted rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import TooLarge
from .lattice import FiniteLattice

ORACLE_CAP = 15


class CompletelyClass(Enum):
    JOIN_PRIME = "completely_join_prime"
    MEET_PRIME = "completely_meet_prime"
    JOIN_IRREDUCIBLE = "completely_join_irreducible"
    MEET_IRREDUCIBLE = "completely_meet_irreducible"


@dataclass(frozen=True)
class ElementClassification:
    element: int
    c_circle: int
    is_point: bool
    join_prime: bool
    meet_prime: bool
    join_irreducible: bool
    meet_irreducible: bool
    completely_join_prime: bool  # = g-prime
    completely_meet_prime: bool
    completely_join_irreducible: bool
    completely_meet_irreducible: bool

    FLAG_NAMES = ("is_point", "join_prime", "meet_prime", "join_irreducible",
                  "meet_irreducible", "completely_join_prime",
                  "completely_meet_prime", "completely_join_irreducible",
                  "completely_meet_irreducible")

    def as_flags(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in self.FLAG_NAMES}


def c_circle(L: FiniteLattice, c: int) -> int:
    """Join of all elements strictly below c (bottom for c = bottom)."""
    return L.join_set(L.strict_down_set(c))


def is_point(L: FiniteLattice, c: int) -> bool:
    """True iff c is not the join of the elements strictly below it."""
    return c_circle(L, c) != L.check_element(c)


def _join_prime(L, c):
    for a in range(L.n):
        for b in range(a, L.n):
            if L.le(c, L.join(a, b)) and not (L.le(c, a) or L.le(c, b)):
                return False
    return True


def _meet_prime(L, c):
    for a in range(L.n):
        for b in range(a, L.n):
            if L.le(L.meet(a, b), c) and not (L.le(a, c) or L.le(b, c)):
                return False
    return True


def _join_irreducible(L, c):
    for a in range(L.n):
        for b in range(a, L.n):
            if L.join(a, b) == c and a != c and b != c:
                return False
    return True


def _meet_irreducible(L, c):
    for a in range(L.n):
        for b in range(a, L.n):
            if L.meet(a, b) == c and a != c and b != c:
                return False
    return True


def classify_element(L: FiniteLattice, c: int) -> ElementClassification:
    c = L.check_element(c)
    circ = c_circle(L, c)
    jp = _join_prime(L, c)
    mp = _meet_prime(L, c)
    ji = _join_irreducible(L, c)
    mi = _meet_irreducible(L, c)
    return ElementClassification(
        element=c,
        c_circle=circ,
        is_point=(circ != c),
        join_prime=jp,
        meet_prime=mp,
        join_irreducible=ji,
        meet_irreducible=mi,
        # In a finite lattice the arbitrary-subset conditions reduce to the
        # binary ones except for the empty subset, which rules out bottom on
        # the join side and top on the meet side.
        completely_join_prime=jp and c != L.bottom,
        completely_meet_prime=mp and c != L.top,
        completely_join_irreducible=ji and c != L.bottom,
        completely_meet_irreducible=mi and c != L.top,
    )


def oracle_completely(L: FiniteLattice, c: int, which: CompletelyClass,
                      cap: int = ORACLE_CAP) -> bool:
    """Decide a completely-class by enumerating every subset of elements and
    checking the defining implication literally, including the empty one."""
    c = L.check_element(c)
    if L.n > cap:
        raise TooLarge(L.n, cap)
    join_side = which in (CompletelyClass.JOIN_PRIME,
                          CompletelyClass.JOIN_IRREDUCIBLE)
    prime = which in (CompletelyClass.JOIN_PRIME, CompletelyClass.MEET_PRIME)
    table = L.join_table if join_side else L.meet_table
    # subset aggregates by dynamic programming over bitmasks; the empty
    # subset folds to bottom (join side) / top (meet side)
    agg = [L.bottom if join_side else L.top] * (1 << L.n)
    for mask in range(1, 1 << L.n):
        low = (mask & -mask).bit_length() - 1
        agg[mask] = table[agg[mask & (mask - 1)]][low]
    if prime:
        # elements comparable with c on the relevant side, as a bitmask
        witness = 0
        for s in range(L.n):
            if (L.le(c, s) if join_side else L.le(s, c)):
                witness |= 1 << s
        for mask in range(1 << L.n):
            holds = L.le(c, agg[mask]) if join_side else L.le(agg[mask], c)
            if holds and not mask & witness:
                return False
    else:
        for mask in range(1 << L.n):
            if agg[mask] == c and not mask >> c & 1:
                return False
    return True


@dataclass(frozen=True)
class SpectrumReport:
    lattice_name: str
    classifications: tuple[ElementClassification, ...]
    point_sets: dict[str, tuple[int, ...]]


# Space-kind key -> predicate over an ElementClassification.  The kgp point
# set is the completely-join-prime one: every g-prime element is a point, so
# no separate point condition is needed (asserted in tests).
POINT_SET_PREDICATES = {
    "k": lambda e: e.is_point,
    "kp": lambda e: e.is_point and e.join_prime,
    "kgp": lambda e: e.completely_join_prime,
    "meet_prime": lambda e: e.meet_prime,
    "completely_meet_prime": lambda e: e.completely_meet_prime,
    "join_prime_dual": lambda e: e.join_prime,
    "meet_irreducible": lambda e: e.meet_irreducible,
    "completely_meet_irreducible": lambda e: e.completely_meet_irreducible,
    "join_irreducible_dual": lambda e: e.join_irreducible,
    "completely_join_irreducible_dual": lambda e: e.completely_join_irreducible,
}


def spectrum_report(L: FiniteLattice) -> SpectrumReport:
    classifications = tuple(classify_element(L, c) for c in range(L.n))
    point_sets = {
        kind: tuple(e.element for e in classifications if pred(e))
        for kind, pred in POINT_SET_PREDICATES.items()
    }
    return SpectrumReport(L.name, classifications, point_sets)


def report_to_json(L: FiniteLattice, report: SpectrumReport) -> dict:
    """JSON form keyed by element label, plus the derived point sets."""
    return {
        "lattice": report.lattice_name,
        "elements": {
            L.elements[e.element]: dict(
                c_circle=L.elements[e.c_circle], **e.as_flags())
            for e in report.classifications
        },
        "point_sets": {
            kind: [L.elements[i] for i in points]
            for kind, points in sorted(report.point_sets.items())
        },
    }
