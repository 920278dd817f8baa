"""Exception types shared across the package."""


class LatClassError(Exception):
    """Base class for all errors raised by this package."""


class DocumentError(LatClassError):
    """A JSON document is malformed or of an unrecognized type."""


class DuplicateLabel(LatClassError):
    def __init__(self, label):
        super().__init__(f"duplicate element label: {label!r}")
        self.label = label


class CycleError(LatClassError):
    def __init__(self, cycle):
        super().__init__(f"covering relation contains a cycle through {cycle}")
        self.cycle = tuple(cycle)


class NotALattice(LatClassError):
    def __init__(self, pair, which):
        a, b = pair
        super().__init__(f"pair ({a}, {b}) has no unique {which}")
        self.pair = (a, b)
        self.which = which


class UnknownElement(LatClassError):
    def __init__(self, element):
        super().__init__(f"unknown lattice element: {element!r}")
        self.element = element


class UnknownPoint(LatClassError):
    def __init__(self, point):
        super().__init__(f"unknown point: {point!r}")
        self.point = point


class NotMonotone(LatClassError):
    def __init__(self, pair):
        a, b = pair
        super().__init__(f"map is not monotone on the pair ({a}, {b})")
        self.pair = (a, b)


class NotIso(LatClassError):
    def __init__(self, reason):
        super().__init__(f"homomorphism is not a verified isomorphism: {reason}")
        self.reason = reason


class NotCompleteHom(LatClassError):
    def __init__(self, level):
        super().__init__(f"homomorphism level is {level}, complete required")
        self.level = level


class TooLarge(LatClassError):
    def __init__(self, size, cap):
        super().__init__(f"input of size {size} exceeds the cap of {cap}")
        self.size = size
        self.cap = cap


class MissingEmpty(LatClassError):
    def __init__(self):
        super().__init__("closed-set family does not contain the empty set")


class MissingFull(LatClassError):
    def __init__(self):
        super().__init__("closed-set family does not contain the full point set")


class NotClosedUnderUnion(LatClassError):
    def __init__(self, witness):
        super().__init__(f"family is not closed under union, witness pair {witness}")
        self.witness = witness


class NotClosedUnderIntersection(LatClassError):
    def __init__(self, witness):
        super().__init__(f"family is not closed under intersection, witness pair {witness}")
        self.witness = witness


class UnknownObject(LatClassError):
    def __init__(self, obj):
        super().__init__(f"unknown object: {obj!r}")
        self.obj = obj


class MissingZero(LatClassError):
    def __init__(self):
        super().__init__("category table has no valid zero object")
