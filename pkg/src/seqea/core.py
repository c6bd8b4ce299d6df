"""Effect-algebra carriers and the operations derived from the axioms.

An effect algebra is a structure (E, 0, 1, +) where + is a partial,
commutative, associative operation with unique orthosupplements and with 0
the only element orthogonal to 1.  A sequential effect algebra adds a total
product * modelling sequentially performed measurements.  This module fixes
the carrier interface every concrete model implements and defines the
derived notions (orthosupplement, the induced order, orthogonality,
doubling, squares, sharpness, sequential independence) generically over it.

Partiality is data, not failure: partial operations return ``Defined(x)``
or ``UNDEFINED``, never raise.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterable, Sequence


@dataclass(frozen=True, slots=True)
class Defined:
    """A partial-operation result that exists."""

    value: Any

    def __repr__(self) -> str:
        return f"Defined({self.value})"

    def __bool__(self) -> bool:
        return True


class _Undefined:
    """Singleton marker for a partial-operation result that does not exist."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "Undefined"

    def __bool__(self) -> bool:
        return False

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _Undefined)

    def __hash__(self) -> int:
        return hash(_Undefined)


UNDEFINED = _Undefined()

# A PartialResult is either Defined(element) or UNDEFINED.
PartialResult = Defined | _Undefined


def is_defined(r: PartialResult) -> bool:
    return isinstance(r, Defined)


class ComplementNotFound(Exception):
    """No orthosupplement was found within the carrier's sample.

    Signals a broken model or a sample too small to contain the witness.
    """


class Carrier(ABC):
    """A concrete (sequential) effect algebra, quantified over via sample().

    ``sample()`` is the finite quantification surface used by every
    universally quantified check; infinite models expose windowed samples.
    ``extended_sample()`` is a superset used where witnesses may live
    outside the sample proper (order witnesses, complement uniqueness).
    """

    zero: Any
    one: Any

    @abstractmethod
    def oplus(self, x: Any, y: Any) -> PartialResult:
        """The partial sum; symmetric in definedness and value."""

    @abstractmethod
    def sprod(self, x: Any, y: Any) -> Any:
        """The total sequential product."""

    @abstractmethod
    def sample(self) -> Sequence[Any]:
        """Finite, deterministically ordered set of elements."""

    def extended_sample(self) -> Sequence[Any]:
        return self.sample()

    def fmt(self, x: Any) -> str:
        return str(x)

    def complement_of(self, x: Any) -> Any | None:
        """Closed-form orthosupplement, or None to fall back to search."""
        return None

    def decide_leq(self, x: Any, y: Any) -> bool | None:
        """Closed-form order decision, or None to fall back to scan."""
        return None

    def vector_ops(self):
        """Batch evaluation backend (see axioms module), or None."""
        return None


def orthosupplement(carrier: Carrier, a: Any) -> Any:
    """The unique b with a + b = 1, written a'.

    Uses the carrier's closed form when available, otherwise scans the
    extended sample.  Raises ComplementNotFound when no witness exists
    within the sample.
    """
    b = carrier.complement_of(a)
    if b is not None:
        return b
    for cand in carrier.extended_sample():
        if carrier.oplus(a, cand) == Defined(carrier.one):
            return cand
    raise ComplementNotFound(f"no complement found within sample for {carrier.fmt(a)}")


def orthogonal(carrier: Carrier, a: Any, b: Any) -> bool:
    """a and b are orthogonal when a + b is defined."""
    return is_defined(carrier.oplus(a, b))


def leq_by_scan(carrier: Carrier, a: Any, b: Any, candidates: Iterable[Any] | None = None) -> bool:
    """Decide a <= b by exhaustive witness search: some c with a + c = b.

    The candidate pool defaults to the carrier's extended sample; for
    infinite models the pool must be large enough to contain witnesses
    for the pairs being decided.
    """
    if candidates is None:
        candidates = carrier.extended_sample()
    target = Defined(b)
    return any(carrier.oplus(a, c) == target for c in candidates)


def leq(carrier: Carrier, a: Any, b: Any) -> bool:
    """The induced order: a <= b iff some c satisfies a + c = b."""
    decided = carrier.decide_leq(a, b)
    if decided is not None:
        return decided
    return leq_by_scan(carrier, a, b)


def double(carrier: Carrier, a: Any) -> PartialResult:
    """2a = a + a when a is orthogonal to itself, else Undefined."""
    return carrier.oplus(a, a)


def square(carrier: Carrier, a: Any) -> Any:
    """a2 = a * a (total)."""
    return carrier.sprod(a, a)


def is_sharp(carrier: Carrier, a: Any) -> bool:
    """Sharp elements are exactly the fixed points of squaring: a * a = a."""
    return carrier.sprod(a, a) == a


def seq_independent(carrier: Carrier, a: Any, b: Any) -> bool:
    """a | b: the products in both orders agree."""
    return carrier.sprod(a, b) == carrier.sprod(b, a)
