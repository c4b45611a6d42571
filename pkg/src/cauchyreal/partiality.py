"""Step-indexed partial computations and the space of semi-decisions.

A Partial value maps a fuel budget to an outcome: Done(value) or PENDING.
Outcomes are monotone in fuel: once Done at some fuel, Done with the same
value at every larger fuel.  Sier, the partial computations of the unit value
STAR, represents semi-decidable propositions: the proposition holds iff the
computation is Done at some fuel, and running at a fuel is a sound,
fuel-bounded observation of that.
"""

import threading

from dataclasses import dataclass
from typing import Any


class _Pending:
    __slots__ = ()

    def __repr__(self):
        return "PENDING"


PENDING = _Pending()


@dataclass(frozen=True)
class Done:
    value: Any


class _Unit:
    __slots__ = ()

    def __repr__(self):
        return "STAR"


STAR = _Unit()


class Partial:
    """A fuel-indexed computation; subclasses implement run().

    run(fuel) must be pure and monotone: if run(n) is Done(v) then run(m) is
    Done(v) for every m >= n.
    """

    __slots__ = ()

    def run(self, fuel):
        """The outcome after spending the given fuel: Done(value) or PENDING."""
        raise NotImplementedError


class _Now(Partial):
    __slots__ = ("_outcome",)

    def __init__(self, value):
        self._outcome = Done(value)

    def run(self, fuel):
        return self._outcome


class _Never(Partial):
    __slots__ = ()

    def run(self, fuel):
        return PENDING


_NEVER = _Never()


class _FromStep(Partial):
    __slots__ = ("_step",)

    def __init__(self, step):
        self._step = step

    def run(self, fuel):
        return self._step(fuel)


def now(value):
    """The computation that is already Done(value) at fuel 0."""
    return _Now(value)


def never():
    """The computation that stays PENDING at every fuel."""
    return _NEVER


# Sier values: partial computations of STAR.  TOP is the true semi-decision.
TOP = now(STAR)


def fires(s, fuel):
    """Whether a semi-decision is Done within the given fuel."""
    return s.run(fuel) is not PENDING


def sup_seq(s):
    """Supremum of an increasing sequence of partials, evaluated diagonally.

    s maps n to a Partial, increasing in the sense that later members are
    Done at least as often; run(n) is s(n).run(n), which is monotone exactly
    because of that assumption.
    """
    return _FromStep(lambda n: s(n).run(n))


def map_partial(f, p):
    """Apply f to the result of p, preserving the firing fuel."""
    if isinstance(p, _Now):
        return now(f(p.run(0).value))
    if isinstance(p, _Never):
        return p

    def step(n):
        out = p.run(n)
        if out is PENDING:
            return PENDING
        return Done(f(out.value))

    return _FromStep(step)


def join_sier(a, b):
    """Least upper bound of two semi-decisions: fires as soon as either does."""
    if isinstance(a, _Never):
        return b
    if isinstance(b, _Never):
        return a
    if isinstance(a, _Now):
        return a
    if isinstance(b, _Now):
        return b

    def step(n):
        out = a.run(n)
        if out is not PENDING:
            return out
        return b.run(n)

    return _FromStep(step)


class _CountableSup(Partial):
    """Fires at fuel n iff some stage f(m) with m <= n is Done at fuel n.

    Joining the prefix of stages restores monotonicity, so f need not be
    increasing.  Stages are instantiated lazily and classified once:
    constant stages (now / never) are never re-polled, and the least fuel
    known to fire is cached, so repeated runs at growing fuel only pay for
    the indices not seen before.  A lock keeps concurrent runs consistent.
    """

    __slots__ = ("_f", "_lock", "_next", "_fired_at", "_live")

    def __init__(self, f):
        self._f = f
        self._lock = threading.Lock()
        self._next = 0          # first stage index not yet instantiated
        self._fired_at = None   # least fuel known to produce Done
        self._live = []         # (index, stage) with fuel-dependent outcomes

    def run(self, fuel):
        with self._lock:
            if self._fired_at is not None and fuel >= self._fired_at:
                return Done(STAR)
            while self._next <= fuel:
                m = self._next
                self._next += 1
                stage = self._f(m)
                if isinstance(stage, _Never):
                    continue
                if isinstance(stage, _Now):
                    if self._fired_at is None or m < self._fired_at:
                        self._fired_at = m
                else:
                    self._live.append((m, stage))
            if self._fired_at is not None and fuel >= self._fired_at:
                return Done(STAR)
            for m, stage in self._live:
                if m <= fuel and stage.run(fuel) is not PENDING:
                    if self._fired_at is None or fuel < self._fired_at:
                        self._fired_at = fuel
                    return Done(STAR)
            return PENDING


def countable_sup(f):
    """Semi-decide an existential over countably many semi-decisions.

    f maps a stage index to a Sier; the result is Done(STAR) at fuel n iff
    some f(m) with m <= n is Done at fuel n.
    """
    return _CountableSup(f)


def interleave(a, b):
    """Run two disjoint semi-decisions side by side, reporting which fired.

    Done(True) once a fires, Done(False) once b fires.  The caller guarantees
    a and b never both hold; a is inspected first at each fuel, which is
    unobservable under that contract.
    """
    if isinstance(a, _Now):
        return now(True)
    if isinstance(a, _Never):
        return map_partial(lambda _: False, b)

    def step(n):
        if a.run(n) is not PENDING:
            return Done(True)
        if b.run(n) is not PENDING:
            return Done(False)
        return PENDING

    return _FromStep(step)
