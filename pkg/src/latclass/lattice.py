"""Finite bounded lattices: representation, validation, homomorphisms.

Elements are referenced by index; labels are presentation-only.  The order
is stored as per-element bitmasks (``down[i]`` has bit ``j`` set iff
``j <= i``), which keeps the subset folds used elsewhere cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

from .errors import (
    CycleError,
    DocumentError,
    DuplicateLabel,
    NotALattice,
    NotMonotone,
    UnknownElement,
)


def _mask_bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class FiniteLattice:
    """A finite bounded lattice with materialized join/meet tables.

    Finite and bounded implies complete: joins and meets of arbitrary
    subsets are folds of the binary tables, with the empty join being the
    bottom element and the empty meet the top element.
    """

    __slots__ = ("name", "elements", "down", "covers", "join_table", "meet_table",
                 "bottom", "top", "_index")

    def __init__(self, name, elements, down, covers, join_table, meet_table,
                 bottom, top):
        self.name = name
        self.elements = tuple(elements)
        self.down = tuple(down)
        self.covers = tuple(covers)
        self.join_table = tuple(tuple(row) for row in join_table)
        self.meet_table = tuple(tuple(row) for row in meet_table)
        self.bottom = bottom
        self.top = top
        self._index = {lab: i for i, lab in enumerate(self.elements)}

    # -- construction ---------------------------------------------------

    @classmethod
    def from_covers(cls, name: str, elements: Sequence[str],
                    covers: Sequence[tuple[int, int]]) -> "FiniteLattice":
        """Build from covering pairs (lower, upper); order is their
        reflexive-transitive closure."""
        n = len(elements)
        seen = set()
        for lab in elements:
            if lab in seen:
                raise DuplicateLabel(lab)
            seen.add(lab)
        succ = [set() for _ in range(n)]
        for lo, hi in covers:
            if not (0 <= lo < n and 0 <= hi < n):
                raise UnknownElement((lo, hi))
            succ[lo].add(hi)
        _check_acyclic(succ)
        # up[i] = bitmask of j with i <= j
        up = [1 << i for i in range(n)]
        for i in _reverse_topo_order(succ):
            for j in succ[i]:
                up[i] |= up[j]
        down = [0] * n
        for i in range(n):
            for j in _mask_bits(up[i]):
                down[j] |= 1 << i
        return cls.from_order(name, elements, down)

    @classmethod
    def from_order(cls, name: str, elements: Sequence[str],
                   down: Sequence[int]) -> "FiniteLattice":
        """Build from per-element down-set bitmasks; validates the order and
        the existence of unique joins and meets for every pair."""
        n = len(elements)
        seen = set()
        for lab in elements:
            if lab in seen:
                raise DuplicateLabel(lab)
            seen.add(lab)
        down = list(down)
        for i in range(n):
            if not down[i] >> i & 1:
                raise DocumentError(f"order not reflexive at {i}")
            for j in _mask_bits(down[i]):
                if i != j and down[j] >> i & 1:
                    raise CycleError((i, j))
                if down[j] & ~down[i]:
                    raise DocumentError(f"order not transitive at ({j}, {i})")
        up = [0] * n
        for i in range(n):
            for j in _mask_bits(down[i]):
                up[j] |= 1 << i
        full = (1 << n) - 1
        join_table = [[0] * n for _ in range(n)]
        meet_table = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                join_table[i][j] = join_table[j][i] = _least(
                    up[i] & up[j], up, (i, j), "join")
                meet_table[i][j] = meet_table[j][i] = _greatest(
                    down[i] & down[j], down, (i, j), "meet")
        bottom = _least(full, up, (0, 0), "join")
        top = _greatest(full, down, (0, 0), "meet")
        covers = []
        for i in range(n):
            for j in range(n):
                if i != j and down[j] >> i & 1:
                    between = down[j] & up[i] & ~(1 << i) & ~(1 << j)
                    if not between:
                        covers.append((i, j))
        return cls(name, elements, down, sorted(covers), join_table, meet_table,
                   bottom, top)

    # -- basic queries ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.elements)

    def check_element(self, c: int) -> int:
        if not (isinstance(c, int) and 0 <= c < self.n):
            raise UnknownElement(c)
        return c

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownElement(label) from None

    def le(self, a: int, b: int) -> bool:
        return bool(self.down[b] >> a & 1)

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.le(a, b)

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join_set(self, subset: Iterable[int]) -> int:
        out = self.bottom
        for c in subset:
            out = self.join_table[out][self.check_element(c)]
        return out

    def meet_set(self, subset: Iterable[int]) -> int:
        out = self.top
        for c in subset:
            out = self.meet_table[out][self.check_element(c)]
        return out

    def down_set(self, c: int) -> frozenset[int]:
        return frozenset(_mask_bits(self.down[self.check_element(c)]))

    def up_set(self, c: int) -> frozenset[int]:
        self.check_element(c)
        return frozenset(i for i in range(self.n) if self.le(c, i))

    def strict_down_set(self, c: int) -> frozenset[int]:
        return self.down_set(c) - {c}

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return (self.elements == other.elements and self.down == other.down
                and self.join_table == other.join_table
                and self.meet_table == other.meet_table
                and self.bottom == other.bottom and self.top == other.top)

    def __repr__(self):
        return f"FiniteLattice({self.name!r}, {self.n} elements)"


def _check_acyclic(succ):
    n = len(succ)
    color = [0] * n  # 0 unseen, 1 on stack, 2 done
    stack_trace = []

    def visit(v):
        color[v] = 1
        stack_trace.append(v)
        for w in succ[v]:
            if color[w] == 1:
                raise CycleError(stack_trace[stack_trace.index(w):])
            if color[w] == 0:
                visit(w)
        stack_trace.pop()
        color[v] = 2

    for v in range(n):
        if color[v] == 0:
            visit(v)


def _reverse_topo_order(succ):
    n = len(succ)
    order = []
    seen = [False] * n

    def visit(v):
        seen[v] = True
        for w in succ[v]:
            if not seen[w]:
                visit(w)
        order.append(v)

    for v in range(n):
        if not seen[v]:
            visit(v)
    return order  # children before parents


def _least(candidates_mask, up, pair, which):
    """Least element of the candidate set (the one below all others),
    or NotALattice."""
    if not candidates_mask:
        raise NotALattice(pair, which)
    for c in _mask_bits(candidates_mask):
        if candidates_mask & ~up[c] == 0:
            return c
    raise NotALattice(pair, which)


def _greatest(candidates_mask, down, pair, which):
    if not candidates_mask:
        raise NotALattice(pair, which)
    for c in _mask_bits(candidates_mask):
        if candidates_mask & ~down[c] == 0:
            return c
    raise NotALattice(pair, which)


# -- documents -----------------------------------------------------------


def load_lattice(doc: dict) -> FiniteLattice:
    """Load a lattice document: {"name", "elements", "covers"}.

    Cover entries may reference elements by index or by label.
    """
    if not isinstance(doc, dict) or "elements" not in doc or "covers" not in doc:
        raise DocumentError("lattice document needs 'elements' and 'covers'")
    elements = list(doc["elements"])
    index = {lab: i for i, lab in enumerate(elements)}

    def resolve(e):
        if isinstance(e, str):
            if e not in index:
                raise UnknownElement(e)
            return index[e]
        if isinstance(e, int):
            return e
        raise DocumentError(f"bad cover entry: {e!r}")

    covers = [(resolve(lo), resolve(hi)) for lo, hi in doc["covers"]]
    return FiniteLattice.from_covers(doc.get("name", "lattice"), elements, covers)


def lattice_to_doc(L: FiniteLattice) -> dict:
    return {
        "name": L.name,
        "elements": list(L.elements),
        "covers": [list(c) for c in L.covers],
    }


def lattice_to_dot(L: FiniteLattice) -> str:
    """Graphviz DOT of the Hasse diagram, one edge per cover (lower -> upper)."""
    lines = [f'digraph "{L.name}" {{', "  rankdir=BT;"]
    for i, lab in enumerate(L.elements):
        lines.append(f'  n{i} [label="{lab}"];')
    for lo, hi in L.covers:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- lattice operations --------------------------------------------------


def lattice_join(L: FiniteLattice, subset: Iterable[int]) -> int:
    return L.join_set(subset)


def lattice_meet(L: FiniteLattice, subset: Iterable[int]) -> int:
    return L.meet_set(subset)


def down_set(L: FiniteLattice, c: int) -> frozenset[int]:
    """The principal ideal of c: all elements below it."""
    return L.down_set(c)


def dualize(L: FiniteLattice) -> FiniteLattice:
    """Same elements, reversed order; join/meet and bottom/top swap."""
    n = L.n
    up = [0] * n
    for i in range(n):
        for j in _mask_bits(L.down[i]):
            up[j] |= 1 << i
    return FiniteLattice(
        name=f"{L.name}^op",
        elements=L.elements,
        down=up,
        covers=tuple(sorted((hi, lo) for lo, hi in L.covers)),
        join_table=L.meet_table,
        meet_table=L.join_table,
        bottom=L.top,
        top=L.bottom,
    )


# -- distributivity ------------------------------------------------------

PENTAGON = "pentagon"
DIAMOND = "diamond"


@dataclass(frozen=True)
class ForbiddenSublattice:
    kind: str  # PENTAGON or DIAMOND
    elements: tuple[int, ...]


@dataclass(frozen=True)
class DistributivityVerdict:
    distributive: bool
    witness: Optional[tuple[int, int, int]] = None
    forbidden: Optional[ForbiddenSublattice] = None


def is_distributive(L: FiniteLattice) -> DistributivityVerdict:
    """Exhaustive triple check of a|(b&c) == (a|b)&(a|c); on failure also
    search for an embedded pentagon (N5) or diamond (M3) sublattice."""
    witness = None
    for a in range(L.n):
        for b in range(L.n):
            for c in range(b, L.n):
                if L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), L.join(a, c)):
                    witness = (a, b, c)
                    break
            if witness:
                break
        if witness:
            break
    if witness is None:
        return DistributivityVerdict(True)
    return DistributivityVerdict(False, witness, find_forbidden_sublattice(L))


def find_forbidden_sublattice(L: FiniteLattice) -> Optional[ForbiddenSublattice]:
    """Search all 5-subsets closed under join/meet for the N5/M3 patterns.

    Independent of the triple check: used both as the witness attachment and
    as the second route of the distributivity cross-check.
    """
    for combo in itertools.combinations(range(L.n), 5):
        sub = set(combo)
        if any(L.join(a, b) not in sub or L.meet(a, b) not in sub
               for a, b in itertools.combinations(combo, 2)):
            continue
        shape = _classify_five(L, combo)
        if shape is not None:
            return shape
    return None


def _classify_five(L, combo):
    bot = L.meet_set(combo)
    top = L.join_set(combo)
    mids = [x for x in combo if x != bot and x != top]
    if len(mids) != 3:
        return None
    pairs = [(a, b) for a, b in itertools.combinations(mids, 2)
             if L.le(a, b) or L.le(b, a)]
    if not pairs:
        # all three incomparable: diamond iff pairwise join=top, meet=bot
        if all(L.join(a, b) == top and L.meet(a, b) == bot
               for a, b in itertools.combinations(mids, 2)):
            return ForbiddenSublattice(DIAMOND, tuple(combo))
        return None
    if len(pairs) == 1:
        a, b = pairs[0]
        if L.le(b, a):
            a, b = b, a
        (w,) = [x for x in mids if x not in (a, b)]
        if (L.join(a, w) == top and L.join(b, w) == top
                and L.meet(a, w) == bot and L.meet(b, w) == bot):
            return ForbiddenSublattice(PENTAGON, tuple(combo))
    return None


# -- homomorphisms -------------------------------------------------------


class HomLevel(Enum):
    ORDER = "order"
    LATTICE = "lattice"
    COMPLETE = "complete"


@dataclass(frozen=True)
class LatticeHom:
    source: FiniteLattice
    target: FiniteLattice
    map: tuple[int, ...]
    level: HomLevel
    # first failure of the next stronger level, if any: (operation, operands)
    counterexample: Optional[tuple[str, tuple[int, ...]]] = None

    def __call__(self, c: int) -> int:
        return self.map[self.source.check_element(c)]

    def is_bijective(self) -> bool:
        return (self.source.n == self.target.n
                and len(set(self.map)) == self.source.n)


def check_hom(mapping: Sequence[int], L1: FiniteLattice,
              L2: FiniteLattice) -> LatticeHom:
    """Verify a map exhaustively and record its strongest preservation level.

    Preservation of arbitrary nonempty joins/meets follows from the binary
    case by folding, so the complete level reduces to the binary checks plus
    the empty join (bottom -> bottom) and empty meet (top -> top).
    """
    if len(mapping) != L1.n:
        raise DocumentError("map must be total on the source elements")
    f = tuple(L2.check_element(v) for v in mapping)
    for a in range(L1.n):
        for b in range(L1.n):
            if L1.le(a, b) and not L2.le(f[a], f[b]):
                raise NotMonotone((a, b))
    for a in range(L1.n):
        for b in range(a, L1.n):
            if f[L1.join(a, b)] != L2.join(f[a], f[b]):
                return LatticeHom(L1, L2, f, HomLevel.ORDER, ("join", (a, b)))
            if f[L1.meet(a, b)] != L2.meet(f[a], f[b]):
                return LatticeHom(L1, L2, f, HomLevel.ORDER, ("meet", (a, b)))
    if f[L1.bottom] != L2.bottom:
        return LatticeHom(L1, L2, f, HomLevel.LATTICE, ("join", ()))
    if f[L1.top] != L2.top:
        return LatticeHom(L1, L2, f, HomLevel.LATTICE, ("meet", ()))
    return LatticeHom(L1, L2, f, HomLevel.COMPLETE)


def identity_hom(L: FiniteLattice) -> LatticeHom:
    return check_hom(tuple(range(L.n)), L, L)


def compose_hom(f: LatticeHom, g: LatticeHom) -> LatticeHom:
    """g after f, re-verified from scratch."""
    if f.target is not g.source and f.target != g.source:
        raise DocumentError("homomorphisms are not composable")
    return check_hom(tuple(g.map[v] for v in f.map), f.source, g.target)


def find_isomorphism(L1: FiniteLattice,
                     L2: FiniteLattice) -> Optional[LatticeHom]:
    """Backtracking search for an order-isomorphism.

    Pruned by per-element invariants (down/up set sizes, cover degrees);
    adequate for the target scale of ~20 elements.  A found map is run
    through check_hom and must verify at the complete level; this is
    asserted rather than assumed.
    """
    n = L1.n
    if n != L2.n:
        return None

    def profile(L, i):
        below = bin(L.down[i]).count("1")
        above = len(L.up_set(i))
        cov_lo = sum(1 for lo, hi in L.covers if hi == i)
        cov_hi = sum(1 for lo, hi in L.covers if lo == i)
        return (below, above, cov_lo, cov_hi)

    prof1 = [profile(L1, i) for i in range(n)]
    prof2 = [profile(L2, i) for i in range(n)]
    if sorted(prof1) != sorted(prof2):
        return None
    order1 = sorted(range(n), key=lambda i: prof1[i])
    candidates = {i: [j for j in range(n) if prof2[j] == prof1[i]]
                  for i in range(n)}
    assignment: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == n:
            return True
        i = order1[k]
        for j in candidates[i]:
            if j in used:
                continue
            ok = all((L1.le(i, i2) == L2.le(j, j2))
                     and (L1.le(i2, i) == L2.le(j2, j))
                     for i2, j2 in assignment.items())
            if ok:
                assignment[i] = j
                used.add(j)
                if extend(k + 1):
                    return True
                del assignment[i]
                used.remove(j)
        return False

    if not extend(0):
        return None
    hom = check_hom(tuple(assignment[i] for i in range(n)), L1, L2)
    if hom.level is not HomLevel.COMPLETE or not hom.is_bijective():
        raise AssertionError(
            "order-isomorphism failed complete-level verification")
    return hom


# -- stock constructions -------------------------------------------------


def chain(k: int, name: Optional[str] = None) -> FiniteLattice:
    """Total order on k elements labeled '0'..'k-1'."""
    return FiniteLattice.from_covers(
        name or f"chain{k}", [str(i) for i in range(k)],
        [(i, i + 1) for i in range(k - 1)])


def diamond_m3() -> FiniteLattice:
    return FiniteLattice.from_covers(
        "M3", ["0", "a", "b", "c", "1"],
        [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def pentagon_n5() -> FiniteLattice:
    return FiniteLattice.from_covers(
        "N5", ["0", "a", "b", "c", "1"],
        [(0, 1), (1, 2), (0, 3), (2, 4), (3, 4)])


def powerset_lattice(base_labels: Sequence[str],
                     name: Optional[str] = None) -> FiniteLattice:
    """Powerset of the given base set, ordered by inclusion.

    Element i is the subset whose members are the set bits of i, so the
    join/meet tables are plain bitwise or/and; built directly, bypassing
    the generic pairwise bound search.
    """
    m = len(base_labels)
    n = 1 << m

    def label(mask):
        if mask == 0:
            return "∅"
        return "{" + ",".join(base_labels[b] for b in _mask_bits(mask)) + "}"

    elements = [label(i) for i in range(n)]
    down = [0] * n
    for i in range(n):
        sub = i
        while True:
            down[i] |= 1 << sub
            if sub == 0:
                break
            sub = (sub - 1) & i
    covers = sorted((i & ~(1 << b), i)
                    for i in range(n) for b in _mask_bits(i))
    join_table = [[i | j for j in range(n)] for i in range(n)]
    meet_table = [[i & j for j in range(n)] for i in range(n)]
    return FiniteLattice(name or f"powerset{m}", elements, down, covers,
                         join_table, meet_table, 0, n - 1)
