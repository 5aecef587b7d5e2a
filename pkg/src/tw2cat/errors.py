"""Typed failure modes shared across the package.

Every exception carries enough of a witness to reproduce the defect by hand:
the offending identifiers are stored on the instance, not just interpolated
into the message.
"""


class TwoCatError(Exception):
    """Base class for all structured errors raised by this package."""


class MalformedInput(TwoCatError):
    """Raw description is not even shaped like the entity it claims to be."""


class MissingComposite(TwoCatError):
    def __init__(self, g, f):
        self.g = g
        self.f = f
        super().__init__(f"no composite stored for ({g!r}, {f!r})")


class BadComposite(TwoCatError):
    """A stored composite has the wrong endpoints."""

    def __init__(self, g, f, gf, reason=""):
        self.g = g
        self.f = f
        self.gf = gf
        super().__init__(f"composite ({g!r}, {f!r}) -> {gf!r} invalid: {reason}")


class NonAssociative(TwoCatError):
    def __init__(self, h, g, f, left, right):
        self.h = h
        self.g = g
        self.f = f
        self.left = left
        self.right = right
        super().__init__(
            f"associativity fails on ({h!r}, {g!r}, {f!r}): "
            f"(h.g).f = {left!r} but h.(g.f) = {right!r}"
        )


class BadIdentity(TwoCatError):
    def __init__(self, obj, morphism, reason=""):
        self.obj = obj
        self.morphism = morphism
        super().__init__(f"identity of {obj!r} misbehaves at {morphism!r}: {reason}")


class InterchangeFailure(TwoCatError):
    """Horizontal composition is not functorial on a witnessed quadruple."""

    def __init__(self, witness, detail=""):
        self.witness = witness
        super().__init__(f"interchange fails at {witness!r} {detail}")


class BoundExceeded(TwoCatError):
    def __init__(self, requested, bound, what="size"):
        self.requested = requested
        self.bound = bound
        self.what = what
        super().__init__(f"{what} {requested} exceeds configured bound {bound}")


class ExplosionGuard(TwoCatError):
    """Enumeration was stopped after visiting more nodes than the ceiling."""

    def __init__(self, ceiling, explored):
        self.ceiling = ceiling
        self.explored = explored
        super().__init__(f"search ceiling {ceiling} hit after {explored} nodes")


class OverflowGuard(TwoCatError):
    """An integer exceeded the configured size policy during elimination."""

    def __init__(self, ndigits, limit):
        self.ndigits = ndigits
        self.limit = limit
        super().__init__(f"entry with {ndigits} digits exceeds policy of {limit}")


class IncoherentDiagram(TwoCatError):
    def __init__(self, simplex, detail=""):
        self.simplex = simplex
        super().__init__(f"edge maps do not commute over {simplex!r} {detail}")


class InsufficientBound(TwoCatError):
    def __init__(self, needed, have, what="truncation"):
        self.needed = needed
        self.have = have
        super().__init__(f"{what} bound {have} too small, need at least {needed}")


class NotFiberedInSets(TwoCatError):
    def __init__(self, witness, detail=""):
        self.witness = witness
        super().__init__(f"hom fibers are not sets at {witness!r} {detail}")


class NotCommutative(TwoCatError):
    def __init__(self, a, b):
        self.a = a
        self.b = b
        super().__init__(f"monoid is not commutative: {a!r}*{b!r} != {b!r}*{a!r}")


class ParameterMismatch(TwoCatError):
    """Arguments disagree about flavour parameters (x, y) or sizes."""
