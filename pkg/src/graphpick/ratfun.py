"""Exact arithmetic for polynomials and rational functions in z, w, lam.

Polynomials carry arbitrary-precision integer coefficients in at most the
three variables z, w and lam (the level-curve parameter).  Each monomial is
packed into a single integer key ``ez<<12 | ew<<6 | el`` so that monomial
products are plain integer additions and the packed key itself is the
lexicographic tie-break of the graded-lex term order with z > w > lam.

Rational functions are quotients of two polynomials kept in a canonical
reduced form: numerator and denominator coprime, and the denominator's
leading coefficient positive under the term order.  Equality is therefore
plain structural comparison of the reduced pairs.
"""

from __future__ import annotations

import math
import re
from functools import reduce

__all__ = [
    "Polynomial",
    "RatFun",
    "poly_gcd",
    "poly_lcm",
    "parse_polynomial",
    "parse_ratfun",
    "ratfun_from_json",
    "Z",
    "W",
    "LAM",
]

VARIABLES = ("z", "w", "lam")
_VAR_INDEX = {"z": 0, "w": 1, "lam": 2, "lambda": 2, "λ": 2}
_SHIFTS = (40, 20, 0)
_MASK = 0xFFFFF
_EXP_LIMIT = 1 << 20
_LATEX_NAMES = ("z", "w", "\\lambda")


def _pack(ez: int, ew: int, el: int) -> int:
    if not (0 <= ez < _EXP_LIMIT and 0 <= ew < _EXP_LIMIT and 0 <= el < _EXP_LIMIT):
        raise ValueError(f"monomial exponent out of range: ({ez}, {ew}, {el})")
    return (ez << 40) | (ew << 20) | el


def _unpack(key: int) -> tuple[int, int, int]:
    return key >> 40, (key >> 20) & _MASK, key & _MASK


def _total_degree(key: int) -> int:
    return (key >> 40) + ((key >> 20) & _MASK) + (key & _MASK)


def _grlex(key: int) -> tuple[int, int]:
    return _total_degree(key), key


class Polynomial:
    """Integer-coefficient polynomial in z, w, lam with packed monomial keys."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[int, int]):
        # terms maps packed monomial -> nonzero coefficient; not copied.
        self._terms = terms
        self._hash: int | None = None

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def zero(cls) -> Polynomial:
        return _P_ZERO

    @classmethod
    def one(cls) -> Polynomial:
        return _P_ONE

    @classmethod
    def integer(cls, c: int) -> Polynomial:
        return cls({0: c}) if c else _P_ZERO

    @classmethod
    def variable(cls, name: str) -> Polynomial:
        vi = _VAR_INDEX.get(name)
        if vi is None:
            raise ValueError(f"unknown variable {name!r}")
        return _P_VARS[vi]

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int, int], int]) -> Polynomial:
        out: dict[int, int] = {}
        for (ez, ew, el), c in terms.items():
            if c:
                key = _pack(ez, ew, el)
                v = out.get(key, 0) + c
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        return cls(out)

    # ------------------------------------------------------------------
    # inspection

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_value(self) -> int:
        if not self._terms:
            return 0
        if len(self._terms) == 1 and 0 in self._terms:
            return self._terms[0]
        raise ValueError("polynomial is not constant")

    def terms(self) -> list[tuple[tuple[int, int, int], int]]:
        """Monomials with coefficients, graded-lex descending."""
        keys = sorted(self._terms, key=_grlex, reverse=True)
        return [(_unpack(k), self._terms[k]) for k in keys]

    def degree(self, var: str | None = None) -> int:
        """Degree in one variable, or total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if var is None:
            return max(_total_degree(k) for k in self._terms)
        shift = _SHIFTS[_VAR_INDEX[var]]
        return max((k >> shift) & _MASK for k in self._terms)

    def max_degrees(self) -> tuple[int, int, int]:
        dz = dw = dl = 0
        for k in self._terms:
            ez, ew, el = _unpack(k)
            if ez > dz:
                dz = ez
            if ew > dw:
                dw = ew
            if el > dl:
                dl = el
        return dz, dw, dl

    def leading_coefficient(self) -> int:
        if not self._terms:
            return 0
        return self._terms[max(self._terms, key=_grlex)]

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self._terms.values():
            g = math.gcd(g, c)
            if g == 1:
                return 1
        return g

    # ------------------------------------------------------------------
    # ring arithmetic

    def _coerce(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.integer(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return Polynomial(out)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Polynomial({k: -c for k, c in self._terms.items()})

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._terms, o._terms
        if not a or not b:
            return _P_ZERO
        da, db = self.max_degrees(), o.max_degrees()
        if any(da[i] + db[i] >= _EXP_LIMIT for i in range(3)):
            raise ValueError("product exceeds the supported monomial degree")
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = k1 + k2
                v = get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        out = _P_ONE
        for _ in range(e):
            out = out * self
        return out

    def exact_div(self, d: Polynomial) -> Polynomial:
        """Exact quotient self / d; raises ValueError when the division is inexact."""
        if d.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if not self._terms:
            return _P_ZERO
        if d is _P_ONE or d._terms == {0: 1}:
            return self
        if d.is_constant:
            dc = d._terms[0]
            out = {}
            for k, c in self._terms.items():
                q, r = divmod(c, dc)
                if r:
                    raise ValueError("inexact polynomial division")
                out[k] = q
            return Polynomial(out)
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        dkey = max(d._terms, key=_grlex)
        dlc = d._terms[dkey]
        dz, dw, dl = _unpack(dkey)
        while rem:
            rkey = max(rem, key=_grlex)
            ez, ew, el = _unpack(rkey)
            if ez < dz or ew < dw or el < dl:
                raise ValueError("inexact polynomial division")
            q, r = divmod(rem[rkey], dlc)
            if r:
                raise ValueError("inexact polynomial division")
            qkey = rkey - dkey
            quot[qkey] = q
            for k2, c2 in d._terms.items():
                kk = qkey + k2
                v = rem.get(kk, 0) - q * c2
                if v:
                    rem[kk] = v
                elif kk in rem:
                    del rem[kk]
        return Polynomial(quot)

    def divides(self, other: Polynomial) -> bool:
        try:
            other.exact_div(self)
            return True
        except ValueError:
            return False

    def derivative(self, var: str) -> Polynomial:
        shift = _SHIFTS[_VAR_INDEX[var]]
        out: dict[int, int] = {}
        for k, c in self._terms.items():
            e = (k >> shift) & _MASK
            if e:
                key = k - (1 << shift)
                v = out.get(key, 0) + c * e
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        return Polynomial(out)

    # ------------------------------------------------------------------
    # evaluation

    def evaluate(self, z: complex, w: complex, lam: complex = 0j) -> complex:
        """Nested Horner evaluation at a complex point."""
        if not self._terms:
            return 0j
        tree: dict[int, dict[int, dict[int, int]]] = {}
        for k, c in self._terms.items():
            ez, ew, el = _unpack(k)
            tree.setdefault(ez, {}).setdefault(ew, {})[el] = c
        values = (complex(z), complex(w), complex(lam))

        def horner(level: dict, depth: int) -> complex:
            x = values[depth]
            acc = 0j
            prev = None
            for e in sorted(level, reverse=True):
                v = level[e]
                val = complex(v) if depth == 2 else horner(v, depth + 1)
                if prev is None:
                    acc = val
                else:
                    acc = acc * x ** (prev - e) + val
                prev = e
            return acc * x**prev if prev else acc

        return horner(tree, 0)

    # ------------------------------------------------------------------
    # comparisons, hashing

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # ------------------------------------------------------------------
    # rendering

    def __str__(self):
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for (ez, ew, el), c in self.terms():
            factors = []
            for name, e in (("z", ez), ("w", ew), ("lam", el)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def latex(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for (ez, ew, el), c in self.terms():
            factors = []
            for name, e in zip(_LATEX_NAMES, (ez, ew, el)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{{{e}}}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = " ".join(factors)
            else:
                body = " ".join([str(mag)] + factors)
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


_P_ZERO = Polynomial({})
_P_ONE = Polynomial({0: 1})
_P_VARS = (
    Polynomial({_pack(1, 0, 0): 1}),
    Polynomial({_pack(0, 1, 0): 1}),
    Polynomial({_pack(0, 0, 1): 1}),
)


def _normalize_content_sign(p: Polynomial) -> Polynomial:
    """Divide out the integer content and make the leading coefficient positive."""
    if p.is_zero:
        return _P_ZERO
    c = p.content()
    if p.leading_coefficient() < 0:
        c = -c
    if c == 1:
        return p
    return Polynomial({k: v // c for k, v in p._terms.items()})


# ----------------------------------------------------------------------
# multivariate gcd: contents stripped recursively, then a subresultant
# polynomial remainder sequence in the highest variable present.


def _split_by_var(p: Polynomial, vi: int) -> dict[int, Polynomial]:
    shift = _SHIFTS[vi]
    buckets: dict[int, dict[int, int]] = {}
    for key, c in p._terms.items():
        e = (key >> shift) & _MASK
        rest = key & ~(_MASK << shift)
        buckets.setdefault(e, {})[rest] = c
    return {e: Polynomial(d) for e, d in buckets.items()}


def _join_var(u: dict[int, Polynomial], vi: int) -> Polynomial:
    shift = _SHIFTS[vi]
    out: dict[int, int] = {}
    for e, poly in u.items():
        off = e << shift
        for key, c in poly._terms.items():
            out[key | off] = c
    return Polynomial(out)


def _uv_lc(u: dict[int, Polynomial]) -> Polynomial:
    return u[max(u)]


def _uv_scale(u: dict[int, Polynomial], s: Polynomial) -> dict[int, Polynomial]:
    return {e: c * s for e, c in u.items()}


def _uv_sub(a: dict[int, Polynomial], b: dict[int, Polynomial]) -> dict[int, Polynomial]:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, _P_ZERO) - c
        if v.is_zero:
            out.pop(e, None)
        else:
            out[e] = v
    return out


def _uv_prem(a: dict[int, Polynomial], b: dict[int, Polynomial]) -> dict[int, Polynomial]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    db = max(b)
    lb = _uv_lc(b)
    r = dict(a)
    steps = max(a) - db + 1
    done = 0
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        shifted = {e + dr - db: c * lr for e, c in b.items()}
        r = _uv_sub(_uv_scale(r, lb), shifted)
        done += 1
    if done < steps and r:
        mult = lb ** (steps - done)
        r = _uv_scale(r, mult)
    return r


def _uv_exact_div(u: dict[int, Polynomial], s: Polynomial) -> dict[int, Polynomial]:
    return {e: c.exact_div(s) for e, c in u.items()}


def _monomial_gcd(mono: Polynomial, other: Polynomial) -> Polynomial:
    (mkey,) = mono._terms
    mc = abs(mono._terms[mkey])
    ez, ew, el = _unpack(mkey)
    g = 0
    for key, c in other._terms.items():
        oz, ow, ol = _unpack(key)
        ez, ew, el = min(ez, oz), min(ew, ow), min(el, ol)
        g = math.gcd(g, c)
    return Polynomial({_pack(ez, ew, el): math.gcd(mc, g)})


def _gcd_rec(a: Polynomial, b: Polynomial) -> Polynomial:
    if a._terms == b._terms:
        return a
    vi = None
    for i in range(3):
        shift = _SHIFTS[i]
        if any((k >> shift) & _MASK for k in a._terms) or any(
            (k >> shift) & _MASK for k in b._terms
        ):
            vi = i
            break
    if vi is None:
        return Polynomial.integer(math.gcd(a._terms[0], b._terms[0]))
    if len(a._terms) == 1:
        return _monomial_gcd(a, b)
    if len(b._terms) == 1:
        return _monomial_gcd(b, a)

    ua = _split_by_var(a, vi)
    ub = _split_by_var(b, vi)
    ca = reduce(_gcd_rec, ua.values())
    cb = reduce(_gcd_rec, ub.values())
    if not ca.is_constant or ca._terms.get(0) != 1:
        ua = _uv_exact_div(ua, ca)
    if not cb.is_constant or cb._terms.get(0) != 1:
        ub = _uv_exact_div(ub, cb)
    c = _gcd_rec(ca, cb)

    big, small = (ua, ub) if max(ua) >= max(ub) else (ub, ua)
    g = h = _P_ONE
    while True:
        if max(small) == 0:
            return c
        delta = max(big) - max(small)
        r = _uv_prem(big, small)
        if not r:
            break
        if max(r) == 0:
            return c
        big, small = small, _uv_exact_div(r, g * h**delta)
        g = _uv_lc(big)
        if delta == 1:
            h = g
        elif delta > 1:
            h = (g**delta).exact_div(h ** (delta - 1))
    cont = reduce(_gcd_rec, small.values())
    prim = _uv_exact_div(small, cont)
    return c * _join_var(prim, vi)


def _gcd_full(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor over the integers, content included."""
    g = _gcd_rec(a, b)
    return -g if g.leading_coefficient() < 0 else g


def _is_one(p: Polynomial) -> bool:
    return p._terms == {0: 1}


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor, normalized to content 1 with positive lead."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials")
    if a.is_zero:
        return _normalize_content_sign(b)
    if b.is_zero:
        return _normalize_content_sign(a)
    return _normalize_content_sign(_gcd_rec(a, b))


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    """Least common multiple over the integers, positive leading coefficient."""
    if a.is_zero or b.is_zero:
        raise ValueError("lcm with a zero polynomial")
    m = (a * b).exact_div(_gcd_full(a, b))
    return -m if m.leading_coefficient() < 0 else m


# ----------------------------------------------------------------------
# rational functions


def _as_polynomial(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial.integer(value)
    raise TypeError(f"cannot interpret {value!r} as a polynomial")


class RatFun:
    """Reduced quotient of two integer polynomials in z, w, lam."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        p = _as_polynomial(num)
        q = _as_polynomial(den)
        if q.is_zero:
            raise ZeroDivisionError("zero denominator")
        if p.is_zero:
            self.num = _P_ZERO
            self.den = _P_ONE
            return
        g = _gcd_full(p, q)
        if not _is_one(g):
            p = p.exact_div(g)
            q = q.exact_div(g)
        if q.leading_coefficient() < 0:
            p = -p
            q = -q
        self.num = p
        self.den = q

    @classmethod
    def _raw(cls, num: Polynomial, den: Polynomial) -> RatFun:
        # internal: trusts that (num, den) is already in canonical form
        out = object.__new__(cls)
        out.num = num
        out.den = den
        return out

    # ------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self):
        return bool(self.num)

    def degree(self, var: str | None = None) -> int:
        return max(self.num.degree(var), self.den.degree(var))

    def _coerce(self, other) -> RatFun | None:
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (int, Polynomial)):
            return RatFun(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, o.num, o.den
        if b._terms == d._terms:
            return RatFun(a + c, b)
        g = _gcd_full(b, d)
        if _is_one(g):
            return RatFun._raw(*_sign_fix(a * d + c * b, b * d))
        b1 = b.exact_div(g)
        d1 = d.exact_div(g)
        t = a * d1 + c * b1
        if t.is_zero:
            return _RF_ZERO
        h = _gcd_full(t, g)
        if not _is_one(h):
            t = t.exact_div(h)
            g = g.exact_div(h)
        return RatFun._raw(*_sign_fix(t, g * b1 * d1))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        return RatFun._raw(-self.num, self.den)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, o.num, o.den
        if a.is_zero or c.is_zero:
            return _RF_ZERO
        g1 = _gcd_full(a, d)
        if not _is_one(g1):
            a = a.exact_div(g1)
            d = d.exact_div(g1)
        g2 = _gcd_full(c, b)
        if not _is_one(g2):
            c = c.exact_div(g2)
            b = b.exact_div(g2)
        return RatFun._raw(*_sign_fix(a * c, b * d))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise ValueError("rational powers need an integer exponent")
        base = self if e >= 0 else self.reciprocal()
        out = _RF_ONE
        for _ in range(abs(e)):
            out = out * base
        return out

    def reciprocal(self) -> RatFun:
        if self.num.is_zero:
            raise ZeroDivisionError("reciprocal of the zero rational function")
        return RatFun._raw(*_sign_fix(self.den, self.num))

    def substitute(self, var: str, value: RatFun) -> RatFun:
        """Exact composition self(var <- value) by homogenization."""
        d = max(self.num.degree(var), self.den.degree(var))
        if d <= 0:
            return self
        u, v = value.num, value.den
        upow = [_P_ONE]
        vpow = [_P_ONE]
        for _ in range(d):
            upow.append(upow[-1] * u)
            vpow.append(vpow[-1] * v)

        vi = _VAR_INDEX[var]

        def homog(p: Polynomial) -> Polynomial:
            parts = _split_by_var(p, vi)
            out = _P_ZERO
            for e, coeff in parts.items():
                out = out + coeff * upow[e] * vpow[d - e]
            return out

        new_den = homog(self.den)
        if new_den.is_zero:
            raise ZeroDivisionError("substitution makes the denominator vanish")
        return RatFun(homog(self.num), new_den)

    def derivative(self, var: str) -> RatFun:
        p, q = self.num, self.den
        return RatFun(p.derivative(var) * q - p * q.derivative(var), q * q)

    # ------------------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den._terms == {0: 1}:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def latex(self) -> str:
        if self.den._terms == {0: 1}:
            return self.num.latex()
        return f"\\frac{{{self.num.latex()}}}{{{self.den.latex()}}}"

    def to_json(self) -> dict[str, str]:
        return {"num": str(self.num), "den": str(self.den)}

    def __repr__(self):
        return f"RatFun({str(self)!r})"


def _sign_fix(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    if den.leading_coefficient() < 0:
        return -num, -den
    return num, den


_RF_ZERO = RatFun(0)
_RF_ONE = RatFun(1)

Z = RatFun(Polynomial.variable("z"))
W = RatFun(Polynomial.variable("w"))
LAM = RatFun(Polynomial.variable("lam"))


# ----------------------------------------------------------------------
# parsing


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(lambda|lam|λ)|([zw])|([*^+()\-/]))")


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            tail = text[pos:].strip()
            if not tail:
                break
            raise ValueError(f"cannot parse polynomial near {tail[:12]!r}")
        tokens.append(m.group(m.lastindex))
        pos = m.end()
    return tokens


class _PolyParser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of polynomial text")
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        out = self.parse_term()
        while True:
            tok = self.peek()
            if tok == "+":
                self.take()
                out = out + self.parse_term()
            elif tok == "-":
                self.take()
                out = out - self.parse_term()
            elif tok is None:
                return out
            else:
                raise ValueError(f"unexpected token {tok!r} in polynomial")

    def parse_term(self) -> Polynomial:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        out = self.parse_factor()
        while self.peek() == "*":
            self.take()
            out = out * self.parse_factor()
        return out if sign > 0 else -out

    def parse_factor(self) -> Polynomial:
        tok = self.take()
        if tok.isdigit():
            return Polynomial.integer(int(tok))
        if tok in _VAR_INDEX:
            exp = 1
            if self.peek() == "^":
                self.take()
                etok = self.take()
                if not etok.isdigit():
                    raise ValueError("exponent must be a nonnegative integer")
                exp = int(etok)
            return Polynomial.variable(tok) ** exp
        raise ValueError(f"unexpected token {tok!r} in polynomial")


def parse_polynomial(text: str) -> Polynomial:
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty polynomial text")
    parser = _PolyParser(tokens)
    poly = parser.parse()
    return poly


def _strip_outer_parens(text: str) -> str:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        return s
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0 and i != len(s) - 1:
                return s
    return s[1:-1]


def parse_ratfun(text: str) -> RatFun:
    """Parse the canonical rendering: a polynomial or ``(num)/(den)``."""
    s = text.strip()
    depth = 0
    split = None
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            if split is not None:
                raise ValueError("more than one top-level '/' in rational function")
            split = i
    if split is None:
        return RatFun(parse_polynomial(s))
    num = parse_polynomial(_strip_outer_parens(s[:split]))
    den = parse_polynomial(_strip_outer_parens(s[split + 1 :]))
    return RatFun(num, den)


def ratfun_from_json(obj: dict) -> RatFun:
    if not isinstance(obj, dict) or "num" not in obj or "den" not in obj:
        raise ValueError("rational-function JSON needs 'num' and 'den' strings")
    return RatFun(parse_polynomial(obj["num"]), parse_polynomial(obj["den"]))
