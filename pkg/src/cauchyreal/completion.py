"""Cauchy completion of a premetric space, represented operationally.

A point of the completion is a procedure mapping a requested precision eps to
a base element within eps of the point it denotes.  eta embeds base elements
as constant procedures, limit flattens a Cauchy approximation whose members
are themselves points, and Lipschitz maps on the base extend to the completion
by evaluating at rescaled precision.  Closeness of two completed points is no
longer decidable; it is exposed as a semi-decision built from countably many
finite-precision tests.

Precision bookkeeping is the whole game here.  Every evaluation rule splits
its budget so that each contribution to the final error stays strictly below
its share; the comments on each rule say where the halves go.
"""

import threading

from fractions import Fraction

from .partiality import TOP, countable_sup, fires, never
from .premetric import LipschitzFn, PremetricCarrier, RATIONALS
from .rational import QPos, dyadic

_ONE = Fraction(1)


class CompletionPoint:
    """An element of the completion of a base premetric space.

    The underlying procedure must be a Cauchy approximation: values requested
    at eps and delta always lie within eps + delta of each other, so the point
    it denotes is determined.  approximate() memoizes the finest answer seen
    so far and may serve it for any coarser request; that is sound because a
    value within delta of the point is also within eps for eps >= delta.

    Points carrying an exact base element (built by eta) keep it in `exact`
    and answer every request with it; operations use the tag to fast-path
    exact inputs.  Instances are safe to share between threads.
    """

    __slots__ = ("_approx", "_space", "exact", "_lock", "_best_eps", "_best_val")

    def __init__(self, approx, space, exact=None):
        self._approx = approx
        self._space = space  # a carrier, or a thunk producing one on demand
        self.exact = exact
        self._lock = threading.Lock()
        self._best_eps = None
        self._best_val = None

    @property
    def space(self):
        if not isinstance(self._space, PremetricCarrier):
            with self._lock:
                if not isinstance(self._space, PremetricCarrier):
                    self._space = self._space()
        return self._space

    def approximate(self, eps):
        """A base element within eps of the denoted point.  eps must be > 0."""
        if eps <= 0:
            raise ValueError("precision must be strictly positive, got %s" % (eps,))
        if self.exact is not None:
            return self.exact
        with self._lock:
            if self._best_eps is not None and self._best_eps <= eps:
                return self._best_val
        # Computed outside the lock: the procedure may recurse into other
        # points (or this one at a different precision).
        value = self._approx(eps)
        with self._lock:
            if self._best_eps is None or eps < self._best_eps:
                self._best_eps = eps
                self._best_val = value
        return value

    def __repr__(self):
        if self.exact is not None:
            return "<CompletionPoint exact=%r>" % (self.exact,)
        return "<CompletionPoint>"


class CompletionSpace(PremetricCarrier):
    """Carrier for completed points, with a fuel-bounded boolean closeness.

    close() runs the closeness semi-decision for a fixed fuel, so True
    certifies closeness while False only means it was not confirmed within
    the budget.  That one-sided answer is the best a decidable interface can
    offer over a completion; harnesses that need the decidable shape (nested
    completions, the premetric checkers) accept the asymmetry.
    """

    def __init__(self, base, fuel=96):
        self.base = base
        self.fuel = fuel

    def close(self, eps, x, y):
        return fires(close_semidecide(eps, x, y), self.fuel)

    def __repr__(self):
        return "CompletionSpace(%r, fuel=%s)" % (self.base, self.fuel)


def _infer_space(value):
    if isinstance(value, Fraction):
        return RATIONALS
    if isinstance(value, CompletionPoint):
        return CompletionSpace(value.space)
    return None


def eta(value, space=None):
    """Embed a base element as the constant approximation procedure.

    The carrier is inferred for rationals and for completed points; anything
    else needs an explicit space.
    """
    if space is None:
        space = _infer_space(value)
        if space is None:
            raise TypeError("cannot infer a carrier for %r; pass space=" % (value,))
    return CompletionPoint(lambda eps: value, space, exact=value)


def limit(x):
    """The point a Cauchy approximation by points converges to.

    A request for eps asks the eps/2 member for an eps/2 approximation: the
    member is within eps/2 of the limit and the value within eps/2 of the
    member.  The caller is responsible for x actually being Cauchy.
    """
    return CompletionPoint(lambda eps: x(eps / 2).approximate(eps / 2),
                           lambda: x(_ONE).space)


def close_semidecide(eps, x, y):
    """Semi-decide that x and y are eps-close.

    Stage k compares the points at dyadic precision d = 2**-k and accepts
    when the base distance leaves room for both approximation errors:
    close(eps - 2d, x(d), y(d)).  Acceptance at any stage certifies
    closeness; every strictly eps-close pair has a stage fine enough to see
    the slack, and a pair at distance exactly eps or more never fires.
    """
    space = x.space

    def stage(k):
        d = dyadic(k)
        if 2 * d >= eps:
            return never()
        if space.close(eps - 2 * d, x.approximate(d), y.approximate(d)):
            return TOP
        return never()

    return countable_sup(stage)


def extend_lipschitz(f):
    """Extend a Lipschitz map out of the base space along the completion.

    f is a LipschitzFn from base elements to completed points, with constant
    L.  The extension at x requests eps by evaluating f at x's eps/(2L)
    approximant (the image is then within eps/2 of the true image) and asking
    that image point for eps/2.  Exact-tagged points short-circuit to f
    itself, so the extension agrees with f on embedded base elements on the
    nose.
    """
    constant = QPos(f.constant)

    def extension(x):
        if x.exact is not None:
            return f(x.exact)

        def approx(eps):
            return f(x.approximate(eps / (2 * constant))).approximate(eps / 2)

        return CompletionPoint(approx, lambda: f(x.approximate(_ONE)).space)

    return LipschitzFn(extension, constant)


def extend_lipschitz2(f, l1, l2):
    """Extend a binary Lipschitz map along the completion in both arguments.

    f takes two base elements to a completed point; l1 bounds its expansion
    in the first argument, l2 in the second.  A request for eps gives each
    argument a quarter of the budget scaled by the other argument's constant
    (first at eps/(4 l2), second at eps/(4 l1)) and the image point the
    remaining half.  Exact tags on both arguments short-circuit to f.
    """
    l1 = QPos(l1)
    l2 = QPos(l2)

    def extension(x, y):
        if x.exact is not None and y.exact is not None:
            return f(x.exact, y.exact)

        def approx(eps):
            return f(x.approximate(eps / (4 * l2)),
                     y.approximate(eps / (4 * l1))).approximate(eps / 2)

        return CompletionPoint(
            approx, lambda: f(x.approximate(_ONE), y.approximate(_ONE)).space)

    return extension


def monad_map(f, space=None):
    """Functorial action: lift a Lipschitz base-to-base map to the completion.

    Equal to the extension of eta composed with f.  Pass space when the
    target carrier cannot be inferred from mapped values.
    """
    return extend_lipschitz(LipschitzFn(lambda t: eta(f(t), space), f.constant))


def monad_join(x):
    """Flatten a completed point whose base elements are themselves points.

    A request for eps asks the outer procedure for an eps/2 point, then that
    point for eps/2.  Together with eta this is the extension of the
    identity; joining an exact tag returns the inner point unchanged.
    """
    if x.exact is not None:
        return x.exact

    def approx(eps):
        return x.approximate(eps / 2).approximate(eps / 2)

    def space():
        outer = x.space
        if isinstance(outer, CompletionSpace):
            return outer.base
        return x.approximate(_ONE).space

    return CompletionPoint(approx, space)


def lim_pointwise(s):
    """Limit of a Cauchy family of functions into a completion, pointwise.

    s maps a precision to a function; the result maps a to the limit of the
    family's values at a.  If every member is Lipschitz with a common
    constant, so is the result.
    """
    return lambda a: limit(lambda eps: s(eps)(a))
