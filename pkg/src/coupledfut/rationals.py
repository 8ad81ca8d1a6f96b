"""Exact scalar arithmetic: rationals, dense univariate polynomials in one
formal parameter, and reduced rational functions.

Rational numbers are fractions.Fraction throughout (arbitrary precision,
always canonical).  A ParamPoly stores its coefficients densely, ascending by
degree, with no trailing zeros; the zero polynomial is the empty tuple.  A
RationalFunction is a gcd-reduced quotient whose denominator is monic, so
structural equality coincides with mathematical equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ComputationError, ParseError, PoleError, UsageError

Rational = Fraction


def rat(value: int | str | Fraction) -> Fraction:
    """Build an exact rational from an int, a Fraction, or a string like '-1/2'."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    text = str(value).strip()
    for bad, good in _NORMALIZE.items():
        text = text.replace(bad, good)
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError("bad rational %r" % str(value).strip()) from exc


def rat_text(q: Fraction) -> str:
    """Render a rational as 'p' or 'p/q'."""
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class ParamPoly:
    """Dense univariate polynomial over Fraction in one named parameter."""

    param: str
    coeffs: tuple[Fraction, ...]

    @staticmethod
    def create(param: str, coeffs: Iterable[int | str | Fraction]) -> "ParamPoly":
        return ParamPoly(param, _trim([rat(x) for x in coeffs]))

    @staticmethod
    def zero(param: str) -> "ParamPoly":
        return ParamPoly(param, ())

    @staticmethod
    def const(param: str, value: int | str | Fraction) -> "ParamPoly":
        return ParamPoly.create(param, [value])

    @staticmethod
    def variable(param: str) -> "ParamPoly":
        return ParamPoly(param, (Fraction(0), Fraction(1)))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def constant_value(self) -> Fraction | None:
        """The value if this polynomial is constant, else None."""
        if len(self.coeffs) == 0:
            return Fraction(0)
        if len(self.coeffs) == 1:
            return self.coeffs[0]
        return None

    def __add__(self, other: "ParamPoly") -> "ParamPoly":
        _same_param(self, other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ParamPoly(self.param, _trim([
            self.coeff(i) + other.coeff(i) for i in range(n)]))

    def __sub__(self, other: "ParamPoly") -> "ParamPoly":
        _same_param(self, other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ParamPoly(self.param, _trim([
            self.coeff(i) - other.coeff(i) for i in range(n)]))

    def __neg__(self) -> "ParamPoly":
        return ParamPoly(self.param, tuple(-x for x in self.coeffs))

    def __mul__(self, other: "ParamPoly") -> "ParamPoly":
        _same_param(self, other)
        if not self.coeffs or not other.coeffs:
            return ParamPoly(self.param, ())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return ParamPoly(self.param, _trim(out))

    def scale(self, q: int | str | Fraction) -> "ParamPoly":
        q = rat(q)
        return ParamPoly(self.param, _trim([x * q for x in self.coeffs]))

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def eval(self, x: int | str | Fraction) -> Fraction:
        """Exact evaluation by Horner's rule."""
        x = rat(x)
        acc = Fraction(0)
        for co in reversed(self.coeffs):
            acc = acc * x + co
        return acc

    def derivative(self) -> "ParamPoly":
        return ParamPoly(self.param, _trim([
            self.coeffs[i] * i for i in range(1, len(self.coeffs))]))

    def monic(self) -> "ParamPoly":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return ParamPoly(self.param, tuple(x / lead for x in self.coeffs))

    def shift_pow(self, k: int) -> "ParamPoly":
        """Multiply by parameter^k."""
        if not self.coeffs:
            return self
        return ParamPoly(self.param, (Fraction(0),) * k + self.coeffs)

    def text(self) -> str:
        return poly_text(self)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return "ParamPoly(%s)" % poly_text(self)


def _same_param(a: ParamPoly, b: ParamPoly) -> None:
    if a.param != b.param:
        raise UsageError(
            "mismatched parameter names: %r vs %r" % (a.param, b.param))


def poly_arith(a: ParamPoly, b: ParamPoly, op: str) -> ParamPoly:
    """Dispatch add/sub/mul on two polynomials in the same parameter."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise UsageError("unknown polynomial operation %r" % op)


def poly_divmod(a: ParamPoly, b: ParamPoly) -> tuple[ParamPoly, ParamPoly]:
    """Exact polynomial division with remainder; b must be nonzero."""
    _same_param(a, b)
    if b.is_zero():
        raise ComputationError("polynomial division by zero")
    rem = list(a.coeffs)
    deg_b = b.degree()
    lead_b = b.leading()
    if a.degree() < deg_b:
        return ParamPoly(a.param, ()), a
    quot = [Fraction(0)] * (a.degree() - deg_b + 1)
    for i in range(len(quot) - 1, -1, -1):
        idx = i + deg_b
        if idx < len(rem) and rem[idx] != 0:
            q = rem[idx] / lead_b
            quot[i] = q
            for j, y in enumerate(b.coeffs):
                rem[i + j] -= q * y
    return ParamPoly(a.param, _trim(quot)), ParamPoly(a.param, _trim(rem))


def poly_gcd(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    """Monic polynomial gcd by the Euclidean algorithm."""
    _same_param(a, b)
    if a.is_zero() and b.is_zero():
        raise ComputationError("gcd of two zero polynomials is undefined")
    x, y = a, b
    while not y.is_zero():
        _, r = poly_divmod(x, y)
        x, y = y, r
    return x.monic()


def poly_text(p: ParamPoly) -> str:
    """Render descending, ASCII only: '112c^2-112c+23', '-30c+12', '0'."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i in range(p.degree(), -1, -1):
        co = p.coeff(i)
        if co == 0:
            continue
        sign = "-" if co < 0 else ("+" if parts else "")
        mag = abs(co)
        if i == 0:
            body = rat_text(mag)
        else:
            var = p.param if i == 1 else "%s^%d" % (p.param, i)
            body = var if mag == 1 else rat_text(mag) + var
        parts.append(sign + body)
    return "".join(parts)


@dataclass(frozen=True)
class RationalFunction:
    """Reduced quotient num/den with monic denominator (canonical form)."""

    num: ParamPoly
    den: ParamPoly

    @staticmethod
    def create(num: ParamPoly, den: ParamPoly | None = None) -> "RationalFunction":
        return ratfun_reduce(num, den if den is not None else ParamPoly.const(num.param, 1))

    @staticmethod
    def const(param: str, value: int | str | Fraction) -> "RationalFunction":
        return RationalFunction(ParamPoly.const(param, value), ParamPoly.const(param, 1))

    @staticmethod
    def from_poly(p: ParamPoly) -> "RationalFunction":
        return RationalFunction(p, ParamPoly.const(p.param, 1))

    @property
    def param(self) -> str:
        return self.num.param if not self.num.is_zero() else self.den.param

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def constant_value(self) -> Fraction | None:
        if self.den.degree() != 0:
            return None
        return self.num.constant_value()

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return ratfun_reduce(self.num * other.den + other.num * self.den,
                             self.den * other.den)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return ratfun_reduce(self.num * other.den - other.num * self.den,
                             self.den * other.den)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return ratfun_reduce(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.is_zero():
            raise ComputationError("division by the zero rational function")
        return ratfun_reduce(self.num * other.den, self.den * other.num)

    def scale(self, q: int | str | Fraction) -> "RationalFunction":
        return RationalFunction(self.num.scale(q), self.den)

    def eval(self, x: int | str | Fraction) -> Fraction:
        return ratfun_eval(self, x)

    def to_poly(self) -> ParamPoly:
        """The underlying polynomial; error if the denominator is nontrivial."""
        if not self.is_polynomial():
            raise ComputationError(
                "not a polynomial: (%s)/(%s)" % (poly_text(self.num),
                                                 poly_text(self.den)))
        return self.num.scale(1 / self.den.coeff(0))

    def text(self) -> str:
        if self.is_polynomial():
            return poly_text(self.num.scale(1 / self.den.coeff(0)))
        return "(%s)/(%s)" % (poly_text(self.num), poly_text(self.den))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return "RationalFunction(%s)" % self.text()


def ratfun_reduce(num: ParamPoly, den: ParamPoly) -> RationalFunction:
    """Canonical form: divide by the gcd, then make the denominator monic."""
    _same_param(num, den)
    if den.is_zero():
        raise ComputationError("zero denominator")
    if num.is_zero():
        return RationalFunction(num, ParamPoly.const(num.param, 1))
    g = poly_gcd(num, den)
    if g.degree() > 0:
        num, _ = poly_divmod(num, g)
        den, _ = poly_divmod(den, g)
    lead = den.leading()
    return RationalFunction(num.scale(1 / lead), den.scale(1 / lead))


def ratfun_eval(f: RationalFunction, x: int | str | Fraction) -> Fraction:
    """Exact evaluation; raises PoleError at denominator roots."""
    x = rat(x)
    d = f.den.eval(x)
    if d == 0:
        raise PoleError("pole at %s = %s" % (f.param, rat_text(x)))
    return f.num.eval(x) / d


# ---------------------------------------------------------------------------
# factored text rendering


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _int_primitive(p: ParamPoly) -> tuple[Fraction, ParamPoly]:
    """Write p = scale * P with P integer, content 1, positive leading coeff."""
    if p.is_zero():
        return Fraction(0), p
    lcm = 1
    for x in p.coeffs:
        if x != 0:
            lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
    ints = [x * lcm for x in p.coeffs]
    g = 0
    for x in ints:
        g = _gcd(g, int(x))
    if ints[-1] < 0:
        g = -g
    prim = ParamPoly(p.param, tuple(Fraction(int(x) // g) for x in ints))
    return Fraction(g, lcm), prim


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _rational_root_factors(p: ParamPoly) -> tuple[list[ParamPoly], ParamPoly]:
    """Split off primitive linear factors (q*x - a) at rational roots of p.

    Works up to a scalar: the returned factors multiply to the primitive
    integer part of p, not to p itself.
    """
    factors: list[ParamPoly] = []
    _, rest = _int_primitive(p)
    while rest.degree() >= 1:
        found = None
        if rest.coeff(0) == 0:
            found = Fraction(0)
        else:
            a0 = int(rest.coeff(0))
            an = int(rest.leading())
            for da in _divisors(a0):
                for dl in _divisors(an):
                    for sgn in (1, -1):
                        cand = Fraction(sgn * da, dl)
                        if rest.eval(cand) == 0:
                            found = cand
                            break
                    if found is not None:
                        break
                if found is not None:
                    break
        if found is None:
            break
        lin = ParamPoly.create(p.param, [-found.numerator, found.denominator])
        factors.append(lin)
        quot, rem = poly_divmod(rest, lin)
        assert rem.is_zero()
        _, rest = _int_primitive(quot)
    return factors, rest


def _render_factor_product(factors: list[ParamPoly]) -> str:
    counted: list[tuple[str, int]] = []
    for f in factors:
        s = poly_text(f)
        if counted and counted[-1][0] == s:
            counted[-1] = (s, counted[-1][1] + 1)
        else:
            counted.append((s, 1))
    out = []
    for s, k in counted:
        out.append("(%s)" % s if k == 1 else "(%s)^%d" % (s, k))
    return "".join(out)


def interpolate(param: str,
                points: Sequence[tuple[Fraction, Fraction]]) -> ParamPoly:
    """Exact Lagrange interpolation through distinct abscissae."""
    xs = [p[0] for p in points]
    if len(set(xs)) != len(xs):
        raise UsageError("repeated abscissa in interpolation data")
    total = ParamPoly.zero(param)
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        basis = ParamPoly.const(param, 1)
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = basis * ParamPoly.create(param, [-xj, 1])
            denom *= xi - xj
        total = total + basis.scale(yi / denom)
    return total


# ---------------------------------------------------------------------------
# parsing of coefficient expressions like "2c-1/2", "(3-2c)/2", "-c"

_NORMALIZE = {
    "−": "-",  # unicode minus
    "–": "-",
    "·": "*",
    "×": "*",
}


def _tokenize(text: str) -> list[tuple[str, str]]:
    for bad, good in _NORMALIZE.items():
        text = text.replace(bad, good)
    tokens: list[tuple[str, str]] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit() or ch == ".":
            j = i
            seen_dot = False
            while j < len(text) and (text[j].isdigit() or (text[j] == "." and not seen_dot)):
                seen_dot = seen_dot or text[j] == "."
                j += 1
            tokens.append(("num", text[i:j]))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch))
            i += 1
            continue
        raise ParseError("unexpected character %r in expression %r" % (ch, text))
    return tokens


class _ExprParser:
    """Recursive-descent parser producing a ParamPoly in a fixed parameter."""

    def __init__(self, text: str, param: str):
        self.text = text
        self.param = param
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> str:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else ""

    def take(self) -> tuple[str, str]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> ParamPoly:
        out = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError("trailing input in expression %r" % self.text)
        return out

    def expr(self) -> ParamPoly:
        if self.peek() in ("+", "-"):
            kind, _ = self.take()
            acc = self.term()
            if kind == "-":
                acc = -acc
        else:
            acc = self.term()
        while self.peek() in ("+", "-"):
            kind, _ = self.take()
            rhs = self.term()
            acc = acc + rhs if kind == "+" else acc - rhs
        return acc

    def term(self) -> ParamPoly:
        acc = self.factor()
        while True:
            nxt = self.peek()
            if nxt == "*":
                self.take()
                acc = acc * self.factor()
            elif nxt == "/":
                self.take()
                div = self.factor()
                q = div.constant_value()
                if q is None:
                    raise ParseError(
                        "division by a non-constant in expression %r" % self.text)
                if q == 0:
                    raise ParseError("division by zero in expression %r" % self.text)
                acc = acc.scale(1 / q)
            elif nxt in ("num", "name", "("):
                acc = acc * self.factor()  # implicit multiplication, e.g. "2c"
            else:
                return acc

    def factor(self) -> ParamPoly:
        if self.peek() == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek() == "^":
            self.take()
            kind, val = self.take() if self.pos < len(self.tokens) else ("", "")
            if kind != "num" or "." in val:
                raise ParseError("exponent must be an integer in %r" % self.text)
            out = ParamPoly.const(self.param, 1)
            for _ in range(int(val)):
                out = out * base
            return out
        return base

    def atom(self) -> ParamPoly:
        if self.pos >= len(self.tokens):
            raise ParseError("unexpected end of expression %r" % self.text)
        kind, val = self.take()
        if kind == "num":
            return ParamPoly.const(self.param, Fraction(val))
        if kind == "name":
            if val != self.param:
                raise ParseError(
                    "unknown symbol %r in expression %r (parameter is %r)"
                    % (val, self.text, self.param))
            return ParamPoly.variable(self.param)
        if kind == "(":
            inner = self.expr()
            if self.peek() != ")":
                raise ParseError("unbalanced parentheses in %r" % self.text)
            self.take()
            return inner
        raise ParseError("unexpected token %r in expression %r" % (val, self.text))


def parse_poly(text: str, param: str) -> ParamPoly:
    """Parse an exact polynomial expression in one named parameter."""
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty polynomial expression")
    return _ExprParser(text, param).parse()


def render_factored(f: RationalFunction) -> str:
    """Human-readable factored form, e.g. '-3(112c^2-112c+23)/((56c-3)(56c-53))'.

    Numerator and denominator are split into an integer-primitive product of
    linear factors at rational roots times an unfactored remainder; the overall
    rational scale is printed in front.
    """
    if f.is_zero():
        return "0"
    s_num, p_num = _int_primitive(f.num)
    s_den, p_den = _int_primitive(f.den)
    scale = s_num / s_den
    lin_n, rest_n = _rational_root_factors(p_num)
    lin_d, rest_d = _rational_root_factors(p_den)
    by_root = lambda q: -q.coeff(0) / q.coeff(1)  # linear factors, root order
    fac_n = sorted(lin_n, key=by_root) + (
        [] if rest_n.degree() == 0 else [rest_n])
    fac_d = sorted(lin_d, key=by_root) + (
        [] if rest_d.degree() == 0 else [rest_d])

    if not fac_n:
        num_txt = rat_text(scale)
    elif scale == 1:
        num_txt = (poly_text(fac_n[0]) if len(fac_n) == 1
                   else _render_factor_product(fac_n))
    elif scale == -1:
        num_txt = "-" + _render_factor_product(fac_n)
    else:
        num_txt = rat_text(scale) + _render_factor_product(fac_n)

    if not fac_d:
        return num_txt
    if len(fac_d) == 1:
        return "%s/(%s)" % (num_txt, poly_text(fac_d[0]))
    return "%s/(%s)" % (num_txt, _render_factor_product(fac_d))
