"""Exact arithmetic for symmetric Laurent polynomials and their circle roots.

A Laurent polynomial f(t) with f(t) = f(1/t) is an ordinary polynomial in
x = t - 2 + 1/t, and on the unit circle t = exp(2*pi*i*s) the substitution
becomes x = 2*cos(2*pi*s) - 2, which sweeps the real interval (-4, 0) as the
turn s runs over (0, 1/2).  Everything here works in the x coordinate with
integer or rational coefficients, so questions like "does f vanish at this
circle point" become exact sign determinations for real polynomials.

`SymPoly` is the coefficient vector in ascending powers of x.  `AlgebraicRoot`
is a root of such a polynomial inside (-4, 0), represented by a squarefree
defining polynomial together with a rational isolating interval; all
refinement and sign logic is exact (Sturm sequences over `Fraction`), and
floating point only enters through `eval_turn` / `AlgebraicRoot.turn`, which
use mpmath big-floats at a caller-selected precision.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Iterator

from mpmath.ctx_mp import MPContext

Rational = int | Fraction

DEFAULT_DPS = 30


def mp_context(dps: int) -> MPContext:
    """Fresh mpmath context: callers never mutate the global precision."""
    ctx = MPContext()
    ctx.dps = dps
    return ctx


def _as_exact(value) -> Rational:
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    raise TypeError(f"coefficient must be int or Fraction, got {type(value).__name__}")


_TERM_RE = re.compile(
    r"""^(?P<coeff>\d+(?:/\d+)?)?      # optional integer or a/b coefficient
         (?P<star>\*)?
         (?P<var>[xz])?
         (?:\^(?P<exp>\d+))?$""",
    re.VERBOSE,
)


@dataclass(frozen=True)
class SymPoly:
    """Polynomial in x = t - 2 + 1/t with exact coefficients, ascending order.

    >>> SymPoly.parse("1 + 5*x + 2*x^2").coeffs
    (1, 5, 2)
    >>> print(SymPoly((1, 0, -3)))
    1 - 3*x^2
    """

    coeffs: tuple[Rational, ...]

    def __post_init__(self):
        cleaned = tuple(_as_exact(c) for c in self.coeffs)
        while cleaned and cleaned[-1] == 0:
            cleaned = cleaned[:-1]
        object.__setattr__(self, "coeffs", cleaned)

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls) -> "SymPoly":
        return cls(())

    @classmethod
    def one(cls) -> "SymPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "SymPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Rational) -> "SymPoly":
        return cls((c,))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Rational]) -> "SymPoly":
        return cls(tuple(coeffs))

    @classmethod
    def parse(cls, text: str) -> "SymPoly":
        """Read either a coefficient list "[1,5,2]" or a sum "1 + 5*x + 2*x^2".

        The variable may be written z instead of x, in which case only even
        powers are accepted (z^2 means x); an odd power of z has no symmetric
        Laurent expansion and is rejected.
        """
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial string")
        if text.startswith("["):
            if not text.endswith("]"):
                raise ValueError(f"unterminated coefficient list: {text!r}")
            body = text[1:-1].strip()
            if not body:
                return cls.zero()
            return cls(tuple(_parse_rational(tok) for tok in body.split(",")))
        coeffs: dict[int, Fraction] = {}
        for sign, term in _split_terms(text):
            m = _TERM_RE.match(term)
            if not m:
                raise ValueError(f"cannot parse polynomial term {term!r} in {text!r}")
            coeff = _parse_rational(m.group("coeff") or "1")
            var = m.group("var")
            exp = int(m.group("exp")) if m.group("exp") is not None else (1 if var else 0)
            if var is None and m.group("exp") is not None:
                raise ValueError(f"exponent without variable in term {term!r}")
            if var == "z":
                if exp % 2:
                    raise ValueError(f"odd power z^{exp} is not symmetric in t <-> 1/t")
                exp //= 2
            coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coeff
        size = max(coeffs) + 1 if coeffs else 0
        return cls(tuple(coeffs.get(k, 0) for k in range(size)))

    # -- basic structure --------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree in x; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def leading(self) -> Rational:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "SymPoly") -> "SymPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return SymPoly(tuple(a[i] + b[i] if i < len(b) else a[i] for i in range(len(a))))

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def __neg__(self) -> "SymPoly":
        return SymPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "SymPoly":
        if isinstance(other, (int, Fraction)):
            return SymPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, SymPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return SymPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return SymPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "SymPoly":
        if n < 0:
            raise ValueError("negative power")
        result = SymPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> "SymPoly":
        return SymPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k >= 1))

    # -- evaluation -------------------------------------------------------

    def eval_exact(self, point: Rational) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def sign_at_rational(self, point: Rational) -> int:
        """Exact sign of the value at a rational x, via integer arithmetic."""
        if not self.coeffs:
            return 0
        point = Fraction(point)
        num, den = point.numerator, point.denominator
        scale = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                scale = scale * c.denominator // _int_gcd(scale, c.denominator)
        acc = 0
        power = 1
        # sum of c_k * num^k * den^(deg-k), all integers after clearing denominators
        d = len(self.coeffs) - 1
        den_pows = [1] * (d + 1)
        for k in range(d - 1, -1, -1):
            den_pows[k] = den_pows[k + 1] * den
        for k, c in enumerate(self.coeffs):
            ci = c * scale
            acc += int(ci) * power * den_pows[k]
            power *= num
        return (acc > 0) - (acc < 0)

    def eval_turn(self, s, dps: int = DEFAULT_DPS, ctx: MPContext | None = None):
        """Value at the circle point with turn s, i.e. at x = 2*cos(2*pi*s) - 2."""
        ctx = ctx or mp_context(dps)
        sv = ctx.mpf(s.numerator) / s.denominator if isinstance(s, Fraction) else ctx.mpf(s)
        xx = 2 * ctx.cos(2 * ctx.pi * sv) - 2
        acc = ctx.mpf(0)
        for c in reversed(self.coeffs):
            acc = acc * xx + (ctx.mpf(c.numerator) / c.denominator if isinstance(c, Fraction) else c)
        return acc

    # -- Laurent form -----------------------------------------------------

    def to_t(self) -> dict[int, Rational]:
        """Coefficients of the symmetric Laurent expansion, {power of t: coeff}."""
        acc: dict[int, Rational] = {}
        xpow: dict[int, Rational] = {0: 1}
        for k, c in enumerate(self.coeffs):
            if k:
                xpow = _laurent_mul_x(xpow)
            if c:
                for e, v in xpow.items():
                    acc[e] = acc.get(e, 0) + c * v
        return {e: v for e, v in acc.items() if v != 0}

    @classmethod
    def from_t(cls, laurent: dict[int, Rational]) -> "SymPoly":
        """Inverse of to_t; rejects coefficient tables that are not symmetric."""
        work = {e: _as_exact(Fraction(v)) for e, v in laurent.items() if v != 0}
        for e, v in work.items():
            if work.get(-e, 0) != v:
                raise ValueError(f"Laurent coefficients not symmetric at t^{e}")
        out: list[Rational] = []
        while work:
            d = max(work)
            if d < 0:
                raise ValueError("asymmetric Laurent table")
            lead = work[d]
            while len(out) <= d:
                out.append(0)
            out[d] = lead
            for e, v in _x_power_laurent(d).items():
                work[e] = work.get(e, 0) - lead * v
            work = {e: v for e, v in work.items() if v != 0}
        return cls(tuple(out))

    # -- formatting -------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"SymPoly({self.coeffs!r})"


def _split_terms(text: str) -> Iterator[tuple[int, str]]:
    stripped = text.replace(" ", "")
    if not stripped:
        raise ValueError("empty polynomial string")
    pos = 0
    sign = 1
    if stripped[0] in "+-":
        sign = -1 if stripped[0] == "-" else 1
        pos = 1
    start = pos
    while pos <= len(stripped):
        if pos == len(stripped) or stripped[pos] in "+-":
            if pos == start:
                raise ValueError(f"dangling sign in polynomial string {text!r}")
            yield sign, stripped[start:pos]
            if pos < len(stripped):
                sign = -1 if stripped[pos] == "-" else 1
            start = pos + 1
        pos += 1


def _parse_rational(token: str) -> Rational:
    token = token.strip()
    try:
        if "/" in token:
            return _as_exact(Fraction(token))
        return int(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational literal {token!r}") from exc


def _laurent_mul_x(table: dict[int, Rational]) -> dict[int, Rational]:
    # multiply a Laurent table by x = t - 2 + 1/t
    out: dict[int, Rational] = {}
    for e, v in table.items():
        for shift, w in ((1, 1), (0, -2), (-1, 1)):
            out[e + shift] = out.get(e + shift, 0) + v * w
    return {e: v for e, v in out.items() if v != 0}


def _x_power_laurent(d: int) -> dict[int, Rational]:
    table: dict[int, Rational] = {0: 1}
    for _ in range(d):
        table = _laurent_mul_x(table)
    return table


# -- exact polynomial toolkit (content, gcd, squarefree structure) --------


def _content_primitive(p: SymPoly) -> tuple[Fraction, SymPoly]:
    """Positive rational content and the primitive integer part with the same signs."""
    if p.is_zero():
        return Fraction(1), p
    fracs = [Fraction(c) for c in p.coeffs]
    den_lcm = 1
    for f in fracs:
        den_lcm = den_lcm * f.denominator // _int_gcd(den_lcm, f.denominator)
    ints = [int(f * den_lcm) for f in fracs]
    g = 0
    for v in ints:
        g = _int_gcd(g, abs(v))
    prim = SymPoly(tuple(v // g for v in ints))
    return Fraction(g, den_lcm), prim


def primitive_part(p: SymPoly) -> SymPoly:
    """Integer polynomial with content 1 and positive leading coefficient."""
    _, prim = _content_primitive(p)
    if prim.is_zero():
        return prim
    return prim if prim.leading() > 0 else -prim


def divmod_poly(a: SymPoly, b: SymPoly) -> tuple[SymPoly, SymPoly]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(Fraction(c) for c in a.coeffs)
    quo = [Fraction(0)] * max(len(a.coeffs) - len(b.coeffs) + 1, 0)
    db = b.degree
    lead = Fraction(b.leading())
    for k in range(len(rem) - 1, db - 1, -1):
        if rem[k] == 0:
            continue
        factor = rem[k] / lead
        quo[k - db] = factor
        for j, bc in enumerate(b.coeffs):
            rem[k - db + j] -= factor * bc
    return SymPoly(tuple(quo)), SymPoly(tuple(rem[:db] if db > 0 else ()))


def exact_div(a: SymPoly, b: SymPoly) -> SymPoly:
    quo, rem = divmod_poly(a, b)
    if not rem.is_zero():
        raise ValueError(f"{a} is not divisible by {b}")
    return quo


def poly_gcd(a: SymPoly, b: SymPoly) -> SymPoly:
    """Primitive gcd with positive leading coefficient (1 for coprime inputs)."""
    a, b = primitive_part(a), primitive_part(b)
    while not b.is_zero():
        _, r = divmod_poly(a, b)
        a, b = b, primitive_part(r)
    if a.is_zero():
        return a
    return a


def squarefree_part(p: SymPoly) -> SymPoly:
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return SymPoly.one()
    return primitive_part(exact_div(p, poly_gcd(p, p.derivative())))


def squarefree_decomposition(p: SymPoly) -> list[tuple[SymPoly, int]]:
    """Yun decomposition: pairwise-coprime squarefree factors with multiplicities.

    Returns [(q_1, m_1), ...] with p = unit * prod q_i^{m_i}, each q_i primitive
    squarefree of positive degree.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    p = primitive_part(p)
    if p.degree <= 0:
        return []
    out: list[tuple[SymPoly, int]] = []
    g = poly_gcd(p, p.derivative())
    w = exact_div(p, g)
    y = exact_div(p.derivative(), g)
    i = 1
    while w.degree > 0:
        z = y - w.derivative()
        f = poly_gcd(w, z)
        if f.degree > 0:
            out.append((primitive_part(f), i))
        w = exact_div(w, f)
        y = exact_div(z, f)
        i += 1
    return out


# -- Sturm sequences and root isolation -----------------------------------


def _sturm_chain(q: SymPoly) -> list[SymPoly]:
    # each element is scaled by a positive constant only, preserving all signs
    chain = [_positive_content_scale(q)]
    d = chain[0].derivative()
    if d.is_zero():
        return chain
    chain.append(_positive_content_scale(d))
    while chain[-1].degree > 0:
        _, r = divmod_poly(chain[-2], chain[-1])
        if r.is_zero():
            break
        chain.append(_positive_content_scale(-r))
    return chain


def _positive_content_scale(p: SymPoly) -> SymPoly:
    _, prim = _content_primitive(p)
    return prim


def _variations(chain: list[SymPoly], point: Fraction) -> int:
    signs = [s for s in (p.sign_at_rational(point) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_roots(chain: list[SymPoly], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct roots of chain[0] in the half-open interval (lo, hi]."""
    return _variations(chain, lo) - _variations(chain, hi)


def _isolate_squarefree(q: SymPoly, lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    # precondition: q(lo) != 0 and q(hi) != 0, so (lo, hi] counts the open interval
    chain = _sturm_chain(q)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        c = _count_roots(chain, a, b)
        if c == 0:
            continue
        if c == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        if q.sign_at_rational(mid) == 0:
            eps = (b - a) / 8
            while (
                q.sign_at_rational(mid - eps) == 0
                or q.sign_at_rational(mid + eps) == 0
                or _count_roots(chain, mid - eps, mid + eps) != 1
            ):
                eps /= 2
            out.append((mid - eps, mid + eps))
            stack.append((a, mid - eps))
            stack.append((mid + eps, b))
        else:
            stack.append((a, mid))
            stack.append((mid, b))
    return sorted(out)


@dataclass(frozen=True)
class AlgebraicRoot:
    """A real algebraic number in (-4, 0), i.e. a circle root with turn in (0, 1/2).

    `defpoly` is squarefree with exactly one root in the open interval
    (lo, hi), and `multiplicity` records the multiplicity that root carries in
    the polynomial it was isolated from.  Instances are immutable; `refine`
    returns a new root with a narrower interval.
    """

    defpoly: SymPoly
    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    def __post_init__(self):
        if self.defpoly.degree < 1:
            raise ValueError("defining polynomial must be nonconstant")
        if not self.lo < self.hi:
            raise ValueError("empty isolating interval")

    def width(self) -> Fraction:
        return self.hi - self.lo

    def _bisect_once(self) -> "AlgebraicRoot":
        lo, hi = self.lo, self.hi
        mid = (lo + hi) / 2
        s_mid = self.defpoly.sign_at_rational(mid)
        if s_mid == 0:
            # the root is exactly the rational midpoint; shrink symmetrically
            eps = (hi - lo) / 8
            while (
                self.defpoly.sign_at_rational(mid - eps) == 0
                or self.defpoly.sign_at_rational(mid + eps) == 0
            ):
                eps /= 2
            return AlgebraicRoot(self.defpoly, mid - eps, mid + eps, self.multiplicity)
        if s_mid == self.defpoly.sign_at_rational(lo):
            return AlgebraicRoot(self.defpoly, mid, hi, self.multiplicity)
        return AlgebraicRoot(self.defpoly, lo, mid, self.multiplicity)

    def refine(self, digits: int) -> "AlgebraicRoot":
        """Root with the same value whose interval is narrower than 10**-digits."""
        target = Fraction(1, 10**digits)
        root = self
        while root.width() >= target:
            root = root._bisect_once()
        return root

    def refine_width(self, width: Fraction) -> "AlgebraicRoot":
        root = self
        while root.width() >= width:
            root = root._bisect_once()
        return root

    def x_mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def rational_value(self) -> Fraction | None:
        """The root itself when it is rational (possible only at -1, -2, -3)."""
        for cand in (Fraction(-1), Fraction(-2), Fraction(-3)):
            if self.lo < cand < self.hi and self.defpoly.sign_at_rational(cand) == 0:
                return cand
        return None

    def turn_exact(self) -> Fraction | None:
        """Exact turn when the circle root sits at a rational turn (1/6, 1/4, 1/3)."""
        val = self.rational_value()
        if val == Fraction(-1):
            return Fraction(1, 6)
        if val == Fraction(-2):
            return Fraction(1, 4)
        if val == Fraction(-3):
            return Fraction(1, 3)
        return None

    def turn(self, dps: int = DEFAULT_DPS):
        """The turn s in (0, 1/2) with 2*cos(2*pi*s) - 2 equal to this root."""
        ctx = mp_context(dps + 10)
        root = self
        target = ctx.mpf(10) ** (-(dps + 2))
        while True:
            s_lo = _turn_of_x(ctx, root.hi)
            s_hi = _turn_of_x(ctx, root.lo)
            if abs(s_hi - s_lo) < target:
                break
            root = root._bisect_once()
        out = mp_context(dps)
        return +out.mpf((s_lo + s_hi) / 2)

    def turn_str(self, digits: int = 20) -> str:
        ctx = mp_context(digits + 10)
        value = self.turn(dps=digits + 5)
        return ctx.nstr(value, digits)

    def same_root(self, other: "AlgebraicRoot") -> bool:
        """Exact equality as real numbers (not as representations)."""
        if primitive_part(self.defpoly) == primitive_part(other.defpoly):
            g = primitive_part(self.defpoly)
        else:
            # distinct defining polynomials share the root only through their gcd
            g = poly_gcd(self.defpoly, other.defpoly)
        if g.degree < 1:
            return False
        chain = _sturm_chain(g)
        a, b = self, other
        while True:
            lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
            if not lo < hi:
                return False
            if g.sign_at_rational(lo) != 0 and g.sign_at_rational(hi) != 0:
                return _count_roots(chain, lo, hi) >= 1
            a, b = a._bisect_once(), b._bisect_once()


def _turn_of_x(ctx: MPContext, x_val: Fraction):
    c = 1 + ctx.mpf(x_val.numerator) / (2 * x_val.denominator)
    return ctx.acos(c) / (2 * ctx.pi)


def isolate_roots(p: SymPoly) -> list[AlgebraicRoot]:
    """All roots of p in (-4, 0) with multiplicities, ordered by increasing turn.

    Increasing turn means decreasing x, so the list runs from the root nearest
    t = 1 around the upper unit semicircle towards t = -1.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    roots: list[AlgebraicRoot] = []
    for factor, mult in squarefree_decomposition(p):
        q = factor
        for bound in (Fraction(-4), Fraction(0)):
            while q.degree > 0 and q.sign_at_rational(bound) == 0:
                q = exact_div(q, SymPoly((-bound, 1)))
        if q.degree < 1:
            continue
        for lo, hi in _isolate_squarefree(q, Fraction(-4), Fraction(0)):
            roots.append(AlgebraicRoot(q, lo, hi, mult))
    changed = True
    while changed:
        changed = False
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                a, b = roots[i], roots[j]
                if a.lo < b.hi and b.lo < a.hi:
                    roots[i], roots[j] = a._bisect_once(), b._bisect_once()
                    changed = True
    roots.sort(key=lambda r: r.lo, reverse=True)
    return roots


# -- exact signs at algebraic points --------------------------------------


def sign_at(p: SymPoly, root: AlgebraicRoot) -> int:
    """Exact sign of p at the root's value: -1, 0, or +1, never a tolerance."""
    if p.is_zero():
        return 0
    if p.degree == 0:
        return 1 if p.coeffs[0] > 0 else -1
    g = poly_gcd(p, root.defpoly)
    if g.degree >= 1:
        chain = _sturm_chain(g)
        r = root
        lo, hi = r.lo, r.hi
        while g.sign_at_rational(lo) == 0 or g.sign_at_rational(hi) == 0:
            r = r._bisect_once()
            lo, hi = r.lo, r.hi
        if _count_roots(chain, lo, hi) >= 1:
            return 0
    # p does not vanish at the root; shrink until p has constant sign on the interval
    q = squarefree_part(p)
    chain = _sturm_chain(q)
    r = root
    while True:
        rv = r.rational_value()
        if rv is not None:
            return p.sign_at_rational(rv)
        if (
            q.sign_at_rational(r.lo) != 0
            and q.sign_at_rational(r.hi) != 0
            and _count_roots(chain, r.lo, r.hi) == 0
        ):
            return p.sign_at_rational(r.lo)
        r = r._bisect_once()


def theta_sign(p: SymPoly, root: AlgebraicRoot) -> tuple[int, int]:
    """Order and sign of the leading term of p along the circle at this root.

    Writing F(s) = p(2*cos(2*pi*s) - 2) and s0 for the root's turn, returns
    (k, sgn) with F(s) ~ sgn * |a| * (s - s0)**k near s0.  The vanishing order
    in s equals the vanishing order in x because dx/ds is nonzero on (0, 1/2);
    the sign picks up (-1)**k since x is decreasing in s.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no leading term")
    deriv = p
    k = 0
    while True:
        s = sign_at(deriv, root)
        if s != 0:
            return k, s * (1 if k % 2 == 0 else -1)
        deriv = deriv.derivative()
        k += 1
        if deriv.is_zero():
            raise ValueError("polynomial vanishes identically at the root")
