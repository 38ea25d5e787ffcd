"""Series at infinity, walk generating functions, level curves, contact order.

A Laurent series here is a truncated expansion sum_k c_k z^(-k) whose
coefficients are rational functions of lam alone (plain rationals for walk
series).  Negative orders carry the polynomial part.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import ColoredGraph, distance
from .linalg import SymMatrix, inverse_entry
from .nevanlinna import representing_function
from .ratfun import Polynomial, RatFun

_P_ZERO = Polynomial.zero()
_RF_ZERO = RatFun(0)
_RF_ONE = RatFun(1)
_Z = Polynomial.variable("z")


@dataclass(frozen=True)
class LaurentSeries:
    """Truncated expansion at z = infinity.

    ``coefficients[i]`` multiplies z^-(start_order + i); the list runs up
    to (and including) truncation_order.  An all-zero truncated expansion
    is stored with an empty coefficient list and start_order just past the
    truncation.
    """

    start_order: int
    coefficients: tuple[RatFun, ...]
    truncation_order: int

    def __post_init__(self):
        expected = self.truncation_order - self.start_order + 1
        if len(self.coefficients) != max(expected, 0):
            raise ValueError("coefficient list does not match the order range")

    def coefficient(self, k: int) -> RatFun:
        if k > self.truncation_order:
            raise ValueError(f"order {k} beyond truncation {self.truncation_order}")
        idx = k - self.start_order
        if idx < 0:
            return _RF_ZERO
        return self.coefficients[idx]

    def __str__(self):
        parts: list[str] = []
        for idx, c in enumerate(self.coefficients):
            if c.is_zero:
                continue
            k = self.start_order + idx
            if c.den == Polynomial.one() and len(c.num.terms()) <= 1:
                ctext = str(c.num)
            elif c.den == Polynomial.one():
                ctext = f"({c.num})"
            else:
                ctext = str(c)
            if k > 0:
                term = f"{ctext}*z^-{k}"
            elif k == 0:
                term = ctext
            else:
                term = f"{ctext}*z^{-k}"
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append(f" - {term[1:]}")
            else:
                parts.append(f" + {term}")
        if not parts:
            parts.append("0")
        parts.append(f" + O(z^-{self.truncation_order + 1})")
        return "".join(parts)

    def to_json(self) -> dict:
        return {
            "start_order": self.start_order,
            "truncation_order": self.truncation_order,
            "coefficients": [c.to_json() for c in self.coefficients],
        }


def _empty_series(order: int) -> LaurentSeries:
    return LaurentSeries(order + 1, (), order)


def _z_profile(p: Polynomial) -> dict[int, RatFun]:
    """Coefficients of powers of z, as rational functions of lam."""
    out: dict[int, RatFun] = {}
    grouped: dict[int, dict[tuple[int, int, int], int]] = {}
    for (ez, ew, el), c in p.terms():
        if ew:
            raise ValueError("expected a function of z and lam only")
        grouped.setdefault(ez, {})[(0, 0, el)] = c
    for ez, terms in grouped.items():
        out[ez] = RatFun(Polynomial.from_terms(terms))
    return out


def expand_at_infinity(r: RatFun, order: int) -> LaurentSeries:
    """Expand a rational function of (z, lam) in powers of 1/z.

    Exact over the rationals in lam; the substitution z = 1/u turns the
    quotient into a power-series division at u = 0.
    """
    if r.degree("w") > 0:
        raise ValueError("expected a function of z and lam only")
    if r.is_zero:
        return _empty_series(order)
    num_prof = _z_profile(r.num)
    den_prof = _z_profile(r.den)
    dp = max(num_prof)
    dq = max(den_prof)
    start = dq - dp
    if start > order:
        return _empty_series(order)
    count = order - start + 1
    a = [num_prof.get(dp - m, _RF_ZERO) for m in range(count)]
    b = [den_prof.get(dq - m, _RF_ZERO) for m in range(min(count, dq + 1))]
    inv_b0 = b[0].reciprocal()
    coeffs: list[RatFun] = []
    for m in range(count):
        acc = a[m]
        for i in range(1, min(m, len(b) - 1) + 1):
            if b[i].is_zero:
                continue
            acc = acc - b[i] * coeffs[m - i]
        coeffs.append(acc * inv_b0)
    return LaurentSeries(start, tuple(coeffs), order)


def walk_generating_series(
    g: ColoredGraph, i: int, j: int, order: int
) -> LaurentSeries:
    """Expansion of the (i, j) entry of (A - zI)^(-1); colors are ignored.

    The coefficient of z^-(n+1) is minus the number of length-n walks
    from i to j.
    """
    n = g.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("vertex out of range")
    rows = [[_RF_ZERO] * n for _ in range(n)]
    minus_z = RatFun(-_Z)
    for v in range(n):
        rows[v][v] = minus_z
    for a, b in g.edges:
        rows[a - 1][b - 1] = _RF_ONE
        rows[b - 1][a - 1] = _RF_ONE
    m = SymMatrix(tuple(tuple(r) for r in rows))
    entry = inverse_entry(m, i, j)
    return expand_at_infinity(entry, order)


def first_nonzero_order(s: LaurentSeries) -> int:
    for idx, c in enumerate(s.coefficients):
        if not c.is_zero:
            return s.start_order + idx
    raise ValueError("order exceeds truncation")


def level_curve(f: RatFun) -> RatFun:
    """Solve f(z, w) = lam for w when f has degree one in w.

    With f = (alpha + beta*w)/(gamma + delta*w) the level curve is
    (lam*gamma - alpha)/(beta - lam*delta), a rational function of z and
    lam whose back-substitution into f returns exactly lam.
    """
    if f.degree("lam") > 0:
        raise ValueError("input already depends on lam")
    if f.num.degree("w") > 1 or f.den.degree("w") > 1:
        raise ValueError("multiple w-vertices unsupported")

    def split_w(p: Polynomial) -> tuple[Polynomial, Polynomial]:
        p0: dict[tuple[int, int, int], int] = {}
        p1: dict[tuple[int, int, int], int] = {}
        for (ez, ew, el), c in p.terms():
            if ew == 0:
                p0[(ez, 0, el)] = c
            else:
                p1[(ez, 0, el)] = c
        return Polynomial.from_terms(p0), Polynomial.from_terms(p1)

    alpha, beta = split_w(f.num)
    gamma, delta = split_w(f.den)
    lam_p = Polynomial.variable("lam")
    den = beta - lam_p * delta
    if den.is_zero:
        raise ValueError("cannot solve for w: the level-curve denominator vanishes")
    return RatFun(lam_p * gamma - alpha, den)


def contact_order(f: RatFun) -> int:
    """Order at infinity of the first lam-dependent level-curve coefficient.

    This is the order of vanishing of the difference of level curves for
    two parameter values.  The expansion is truncated past twice the
    z-degree of the denominator, which is beyond the reach of any single
    w-vertex graph.
    """
    curve = level_curve(f)
    bound = 2 * f.den.degree("z") + 4
    series = expand_at_infinity(curve, bound)
    for idx, c in enumerate(series.coefficients):
        if not c.derivative("lam").is_zero:
            return series.start_order + idx
    raise ValueError("contact order exceeds bound")


@dataclass(frozen=True)
class ContactReport:
    order: int
    distance: int
    consistent: bool

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "distance": self.distance,
            "consistent": self.consistent,
        }


def verify_contact_theorem(g: ColoredGraph) -> ContactReport:
    """Compare the contact order with twice the root-to-w distance.

    Requires a graph with exactly one w-colored vertex, every other vertex
    colored z, and the w vertex reachable from the root.
    """
    w_vertices = [v for v in range(1, g.n + 1) if g.color(v).kind == "w"]
    if len(w_vertices) != 1:
        raise ValueError("expected exactly one w-colored vertex")
    if any(g.color(v).kind == "general" for v in range(1, g.n + 1)):
        raise ValueError("general colors are outside the contact-order statement")
    wv = w_vertices[0]
    d = distance(g, g.root, wv)
    if d == float("inf"):
        raise ValueError("w vertex unreachable from the root")
    f = representing_function(g)
    order = contact_order(f)
    return ContactReport(order, int(d), order == 2 * int(d))
