"""Value semigroups: the codomains of generalized distances.

An instance bundles a commutative monoid ``(A, add, zero)``, an order
``leq``, a ball relation ``ball_lt(a, r)`` (read "a is within r"), and a
set of positives with a halving map ``half`` and a down-directedness
witness ``meet_hint``.  The ball relation is required to satisfy

* V1  ``ball_lt(zero, r)`` for every positive ``r``;
* V2  ``ball_lt(a, half(r))`` and ``ball_lt(b, half(r))`` imply ``ball_lt(a + b, r)``;
* V3  ``leq(a, b)`` and ``ball_lt(b, r)`` imply ``ball_lt(a, r)``;
* V4  ``ball_lt(a, meet_hint(r, s))`` implies ``ball_lt(a, r)`` and ``ball_lt(a, s)``.

Three instances ship: :class:`ExtRational` (nonnegative rationals plus
infinity), :class:`ZeroInfFn` ({0, inf}-valued functions on a finite index
set, stored as the set where they are infinite) and
:class:`ProductSemigroup`.
"""

from __future__ import annotations

import itertools
import re
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import total_ordering
from typing import Any, Iterable, Sequence

from .errors import ParseError, ValidationError
from .report import Report


@total_ordering
class _Infinity:
    """The top element of the extended nonnegative rationals."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("quniform.INF")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def as_fraction(value: Any) -> Fraction:
    """Coerce ints, Fractions and ``p/q`` strings to an exact Fraction.

    Floats are refused: they would silently break exact halving.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError(f"not an exact rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValidationError(f"not an exact rational: {value!r}")


_RATIONAL = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL.match(text)
    if not m:
        raise ParseError(f"bad rational literal {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class ValueSemigroup(ABC):
    """Abstract value-semigroup instance.

    Subclasses are immutable and compare equal when they describe the same
    structure, so spaces over "the same" semigroup can be compared.
    """

    kind: str = "abstract"

    @property
    @abstractmethod
    def zero(self): ...

    @abstractmethod
    def contains(self, a) -> bool:
        """Carrier membership."""

    @abstractmethod
    def is_positive(self, r) -> bool:
        """Membership in P."""

    @abstractmethod
    def add(self, a, b): ...

    @abstractmethod
    def leq(self, a, b) -> bool: ...

    @abstractmethod
    def ball_lt(self, a, r) -> bool: ...

    @abstractmethod
    def half(self, r): ...

    @abstractmethod
    def meet_hint(self, r, s): ...

    @abstractmethod
    def parse(self, text: str):
        """Parse one element from its textual syntax."""

    @abstractmethod
    def format(self, a) -> str: ...

    def coerce(self, a):
        """Normalize a user-supplied element; raise if not in the carrier."""
        if not self.contains(a):
            raise ValidationError(f"{a!r} is not an element of {self}")
        return a

    def header(self) -> str:
        """The ``semigroup:`` line used by space files."""
        raise ValidationError(f"{self} has no file syntax")


class ExtRational(ValueSemigroup):
    """Nonnegative rationals with a top element ``INF``.

    Positives are the finite rationals > 0, ``half(r) = r/2``, the ball
    relation is the strict numeric order, and ``meet_hint`` is ``min``.
    """

    kind = "ereal"

    @property
    def zero(self):
        return Fraction(0)

    def contains(self, a):
        if a is INF:
            return True
        if isinstance(a, bool) or not isinstance(a, (int, Fraction)):
            return False
        return a >= 0

    def coerce(self, a):
        if isinstance(a, str):
            a = self.parse(a)
        a = super().coerce(a)
        return a if a is INF else Fraction(a)

    def is_positive(self, r):
        return r is not INF and self.contains(r) and r > 0

    def add(self, a, b):
        if a is INF or b is INF:
            return INF
        return a + b

    def leq(self, a, b):
        return a <= b if a is not INF else b is INF

    def ball_lt(self, a, r):
        return a is not INF and a < r

    def half(self, r):
        return Fraction(r) / 2

    def meet_hint(self, r, s):
        return min(r, s)

    def parse(self, text):
        t = text.strip()
        if t in ("inf", "∞"):
            return INF
        q = parse_rational(t)
        if q < 0:
            raise ParseError(f"negative distance {text!r}")
        return q

    def format(self, a):
        return "inf" if a is INF else format_rational(Fraction(a))

    def header(self):
        return "ereal"

    def __eq__(self, other):
        return type(other) is type(self)

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return "ExtRational()"


EREAL = ExtRational()


class ZeroInfFn(ValueSemigroup):
    """Functions from ``range(omega)`` to {0, inf}, stored as infinity sets.

    Addition is union, zero is the empty set, the order is inclusion and
    the ball relation coincides with it.  Every element is positive and
    is its own half, since ``r + r = r``.
    """

    kind = "zeroinf"

    def __init__(self, omega: int):
        if omega < 0:
            raise ValidationError("omega must be nonnegative")
        self.omega = omega

    @property
    def zero(self):
        return frozenset()

    def contains(self, a):
        return isinstance(a, frozenset) and all(
            isinstance(i, int) and 0 <= i < self.omega for i in a
        )

    def coerce(self, a):
        if isinstance(a, str):
            return self.parse(a)
        if isinstance(a, (set, list, tuple)):
            a = frozenset(a)
        return super().coerce(a)

    def is_positive(self, r):
        return self.contains(r)

    def add(self, a, b):
        return a | b

    def leq(self, a, b):
        return a <= b

    def ball_lt(self, a, r):
        return a <= r

    def half(self, r):
        return r

    def meet_hint(self, r, s):
        return r & s

    def elements(self) -> list[frozenset]:
        """All 2**omega elements, ordered by size then lexicographically."""
        out = []
        for k in range(self.omega + 1):
            out.extend(frozenset(c) for c in itertools.combinations(range(self.omega), k))
        return out

    def parse(self, text):
        t = text.strip()
        if not (t.startswith("{") and t.endswith("}")):
            raise ParseError(f"bad infinity-set literal {text!r}")
        body = t[1:-1].strip()
        if not body:
            return frozenset()
        try:
            idx = frozenset(int(p) for p in body.split(","))
        except ValueError:
            raise ParseError(f"bad infinity-set literal {text!r}") from None
        if not self.contains(idx):
            raise ParseError(f"index out of range 0..{self.omega - 1} in {text!r}")
        return idx

    def format(self, a):
        return "{" + ",".join(str(i) for i in sorted(a)) + "}"

    def header(self):
        return f"zeroinf omega={self.omega}"

    def __eq__(self, other):
        return type(other) is type(self) and other.omega == self.omega

    def __hash__(self):
        return hash((self.kind, self.omega))

    def __repr__(self):
        return f"ZeroInfFn(omega={self.omega})"


class ProductSemigroup(ValueSemigroup):
    """Componentwise product of two instances; elements are pairs."""

    kind = "product"

    def __init__(self, left: ValueSemigroup, right: ValueSemigroup):
        self.left = left
        self.right = right

    @property
    def zero(self):
        return (self.left.zero, self.right.zero)

    def contains(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == 2
            and self.left.contains(a[0])
            and self.right.contains(a[1])
        )

    def coerce(self, a):
        if not (isinstance(a, tuple) and len(a) == 2):
            raise ValidationError(f"{a!r} is not a pair")
        return (self.left.coerce(a[0]), self.right.coerce(a[1]))

    def is_positive(self, r):
        return self.contains(r) and self.left.is_positive(r[0]) and self.right.is_positive(r[1])

    def add(self, a, b):
        return (self.left.add(a[0], b[0]), self.right.add(a[1], b[1]))

    def leq(self, a, b):
        return self.left.leq(a[0], b[0]) and self.right.leq(a[1], b[1])

    def ball_lt(self, a, r):
        return self.left.ball_lt(a[0], r[0]) and self.right.ball_lt(a[1], r[1])

    def half(self, r):
        return (self.left.half(r[0]), self.right.half(r[1]))

    def meet_hint(self, r, s):
        return (self.left.meet_hint(r[0], s[0]), self.right.meet_hint(r[1], s[1]))

    def parse(self, text):
        t = text.strip()
        if not (t.startswith("(") and t.endswith(")")):
            raise ParseError(f"bad pair literal {text!r}")
        depth = 0
        body = t[1:-1]
        for i, ch in enumerate(body):
            if ch in "({":
                depth += 1
            elif ch in ")}":
                depth -= 1
            elif ch == ";" and depth == 0:
                return (self.left.parse(body[:i]), self.right.parse(body[i + 1:]))
        raise ParseError(f"bad pair literal {text!r}")

    def format(self, a):
        return f"({self.left.format(a[0])};{self.right.format(a[1])})"

    def __eq__(self, other):
        return type(other) is type(self) and (other.left, other.right) == (self.left, self.right)

    def __hash__(self):
        return hash((self.kind, self.left, self.right))

    def __repr__(self):
        return f"ProductSemigroup({self.left!r}, {self.right!r})"


def semigroup_from_header(text: str) -> ValueSemigroup:
    """Inverse of :meth:`ValueSemigroup.header`."""
    parts = text.split()
    if parts == ["ereal"]:
        return EREAL
    if len(parts) == 2 and parts[0] == "zeroinf":
        m = re.fullmatch(r"omega=(\d+)", parts[1])
        if m:
            return ZeroInfFn(int(m.group(1)))
    raise ParseError(f"unknown semigroup {text!r}")


VALUE_AXIOMS = (
    "commutativity",
    "associativity",
    "identity",
    "V1_zero_in_ball",
    "V2_half_sum",
    "V3_downward_closed",
    "V4_meet_hint",
    "exact_halving",
    "positives_closed",
)


def check_value_axioms(
    instance: ValueSemigroup,
    sample_elements: Sequence,
    sample_positives: Sequence,
) -> Report:
    """Exhaustively check the value axioms over the given samples.

    Every clause is evaluated on all tuples drawn from the samples; the
    first counterexample found is attached as the witness.
    """
    if not sample_elements or not sample_positives:
        raise ValidationError("samples must be nonempty")
    elems = [instance.coerce(a) for a in sample_elements]
    pos = [instance.coerce(r) for r in sample_positives]
    for r in pos:
        if not instance.is_positive(r):
            raise ValidationError(f"{instance.format(r)} is not a positive")
    f = instance.format
    add, ball, zero = instance.add, instance.ball_lt, instance.zero
    rep = Report("value-axioms")

    def first(candidates):
        return next(candidates, None)

    w = first((a, b) for a in elems for b in elems if add(a, b) != add(b, a))
    rep.add("commutativity", w is None, w and {"a": f(w[0]), "b": f(w[1])})

    w = first(
        (a, b, c)
        for a, b, c in itertools.product(elems, repeat=3)
        if add(add(a, b), c) != add(a, add(b, c))
    )
    rep.add("associativity", w is None, w and {"a": f(w[0]), "b": f(w[1]), "c": f(w[2])})

    w = first(a for a in elems if add(a, zero) != a or add(zero, a) != a)
    rep.add("identity", w is None, {"a": f(w)} if w is not None else None)

    w = first(r for r in pos if not ball(zero, r))
    rep.add("V1_zero_in_ball", w is None, {"r": f(w)} if w is not None else None)

    w = first(
        (a, b, r)
        for r in pos
        for a in elems
        if ball(a, instance.half(r))
        for b in elems
        if ball(b, instance.half(r)) and not ball(add(a, b), r)
    )
    rep.add("V2_half_sum", w is None, w and {"a": f(w[0]), "b": f(w[1]), "r": f(w[2])})

    w = first(
        (a, b, r)
        for a, b in itertools.product(elems, repeat=2)
        if instance.leq(a, b)
        for r in pos
        if ball(b, r) and not ball(a, r)
    )
    rep.add("V3_downward_closed", w is None, w and {"a": f(w[0]), "b": f(w[1]), "r": f(w[2])})

    w = first(
        (a, r, s)
        for r, s in itertools.product(pos, repeat=2)
        for a in elems
        if ball(a, instance.meet_hint(r, s)) and not (ball(a, r) and ball(a, s))
    )
    rep.add("V4_meet_hint", w is None, w and {"a": f(w[0]), "r": f(w[1]), "s": f(w[2])})

    w = first(r for r in pos if add(instance.half(r), instance.half(r)) != r)
    rep.add(
        "exact_halving",
        w is None,
        None if w is None else {
            "r": f(w),
            "half": f(instance.half(w)),
            "sum": f(add(instance.half(w), instance.half(w))),
        },
    )

    w = first(
        (r, s)
        for r, s in itertools.product(pos, repeat=2)
        if not instance.is_positive(instance.half(r))
        or not instance.is_positive(instance.meet_hint(r, s))
    )
    rep.add("positives_closed", w is None, w and {"r": f(w[0]), "s": f(w[1])})
    return rep


def scale(a, c) -> Any:
    """Multiply an extended rational by a finite positive rational."""
    if c is INF:
        raise ValidationError("scale factor must be finite")
    c = as_fraction(c)
    if c <= 0:
        raise ValidationError(f"scale factor must be positive, got {format_rational(c)}")
    a = EREAL.coerce(a)
    return INF if a is INF else a * c


def sample_ereal(values: Iterable) -> list:
    """Coerce a mixed list (ints, Fractions, ``"p/q"``, ``"inf"``) to carrier values."""
    return [EREAL.coerce(v) for v in values]
