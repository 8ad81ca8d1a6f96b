"""Root isolation and cross-validation.

Roots of the invariant's numerator are located exactly: rational roots are
split off by trial division, the remaining squarefree factor is isolated by
Sturm bisection into disjoint rational intervals of requested width, and
degree-two factors additionally get closed-form surd descriptors
(p + q*sqrt(D))/r.  Cross-validation plays the localization engine against
the polytope oracle: per-bundle volumes must agree up to the dimension
factorial, the invariants must agree as rational functions, and the bundle
polytopes must sum to the ambient one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import UsageError
from .localization import (LocalizationScenario, ValidationReport,
                           fut_localized, validate_scenario, volume_localized)
from .polytopes import (MinkowskiReport, ToricModel, fut_toric, fut_toric_at,
                        minkowski_check, realize, volume_curve)
from .rationals import (ParamPoly, RationalFunction, _rational_root_factors,
                        poly_divmod, poly_gcd, rat, rat_text, ratfun_eval)

DEFAULT_WIDTH = Fraction(1, 10 ** 12)
DECIMAL_DIGITS = 18


# ---------------------------------------------------------------------------
# Sturm machinery


def squarefree_part(p: ParamPoly) -> ParamPoly:
    """p divided by gcd(p, p'), made monic."""
    if p.degree() < 1:
        return p.monic()
    g = poly_gcd(p, p.derivative())
    if g.degree() == 0:
        return p.monic()
    q, _ = poly_divmod(p, g)
    return q.monic()


def sturm_chain(p: ParamPoly) -> list[ParamPoly]:
    chain = [p, p.derivative()]
    while chain[-1].degree() >= 1:
        _, r = poly_divmod(chain[-2], chain[-1])
        if r.is_zero():
            break
        chain.append(-r)
    return [q for q in chain if not q.is_zero()]


def _sign_changes(chain: list[ParamPoly], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = q.eval(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_open(p: ParamPoly,
                     interval: tuple[Fraction, Fraction]) -> int:
    """Number of distinct real roots strictly inside the interval."""
    lo, hi = interval
    if not lo < hi:
        raise UsageError("empty interval")
    s = squarefree_part(p)
    if s.degree() < 1:
        return 0
    # endpoint roots are outside the open interval; divide them away
    for endpoint in (lo, hi):
        if s.eval(endpoint) == 0:
            lin = ParamPoly.create(s.param, [-endpoint, 1])
            s, _ = poly_divmod(s, lin)
    chain = sturm_chain(s)
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)


# ---------------------------------------------------------------------------
# root records and isolation


@dataclass(frozen=True)
class RootRecord:
    """One isolated root: a bracketing interval plus optional exact forms.

    exact is set for rational roots (then lo == hi == exact).  surd is set
    for roots of quadratic factors, as integers (p, q, d, r) meaning
    (p + q*sqrt(d))/r.  decimal is correctly rounded to 18 places;
    multiplicity counts the root in the original polynomial.
    """

    lo: Fraction
    hi: Fraction
    exact: Fraction | None
    surd: tuple[int, int, int, int] | None
    decimal: str
    multiplicity: int

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


def _decimal_of_fraction(x: Fraction, digits: int = DECIMAL_DIGITS) -> str:
    scaled = x * 10 ** digits
    n = scaled.numerator // scaled.denominator
    if 2 * (scaled - n) >= 1:
        n += 1
    return _format_scaled(n, digits)


def _decimal_of_surd(p: int, q: int, d: int, r: int,
                     digits: int = DECIMAL_DIGITS) -> str:
    guard = 8
    scale = 10 ** (digits + guard)
    root = math.isqrt(q * q * d * scale * scale)
    if q < 0:
        root = -root
    numer = p * scale + root
    value = numer // r  # r > 0 after normalization
    rounded = (value + 5 * 10 ** (guard - 1)) // 10 ** guard
    return _format_scaled(rounded, digits)


def _format_scaled(n: int, digits: int) -> str:
    sign = "-" if n < 0 else ""
    n = abs(n)
    whole, frac = divmod(n, 10 ** digits)
    return "%s%d.%0*d" % (sign, whole, digits, frac)


def _surd_value_vs(p: int, q: int, d: int, r: int, x: Fraction) -> int:
    """Sign of (p + q*sqrt(d))/r - x for r > 0."""
    rhs = r * x - p  # compare q*sqrt(d) with rhs
    lhs_sq = Fraction(q * q * d)
    rhs_sq = rhs * rhs
    if q >= 0 and rhs < 0:
        return 1
    if q <= 0 and rhs > 0:
        return -1
    if q >= 0:  # both sides nonnegative
        return -1 if lhs_sq < rhs_sq else (0 if lhs_sq == rhs_sq else 1)
    # both sides nonpositive
    return -1 if lhs_sq > rhs_sq else (0 if lhs_sq == rhs_sq else 1)


def _quadratic_surds(quad: ParamPoly) -> list[tuple[int, int, int, int]]:
    """Closed forms (p, q, d, r) for a quadratic with irrational real roots."""
    mult = 1
    for co in quad.coeffs:
        mult = mult * co.denominator // math.gcd(mult, co.denominator)
    a, b, c = (int(quad.coeff(2) * mult), int(quad.coeff(1) * mult),
               int(quad.coeff(0) * mult))
    disc = b * b - 4 * a * c
    if disc <= 0:
        return []
    if math.isqrt(disc) ** 2 == disc:
        return []  # rational roots are handled elsewhere
    core, square = disc, 1
    f = 2
    while f * f <= core:
        while core % (f * f) == 0:
            core //= f * f
            square *= f
        f += 1
    p, q_mag, r = -b, square, 2 * a
    if r < 0:
        p, r = -p, -r
    g = math.gcd(math.gcd(abs(p), q_mag), r)
    p, q_mag, r = p // g, q_mag // g, r // g
    return [(p, -q_mag, core, r), (p, q_mag, core, r)]


def _multiplicity_rational(p: ParamPoly, root: Fraction) -> int:
    lin = ParamPoly.create(p.param, [-root, 1])
    mult = 0
    while True:
        q, r = poly_divmod(p, lin)
        if not r.is_zero():
            return mult
        mult += 1
        p = q


def _multiplicity_bracket(p: ParamPoly, a: Fraction, b: Fraction) -> int:
    """Multiplicity of the single root of p inside (a, b), by gcd descent."""
    mult = 0
    cur = p
    while cur.degree() >= 1 and count_roots_open(cur, (a, b)) > 0:
        mult += 1
        cur = poly_gcd(cur, cur.derivative())
    return mult


def isolate_roots(p: ParamPoly, interval: tuple[Fraction, Fraction],
                  width: Fraction = DEFAULT_WIDTH) -> tuple[RootRecord, ...]:
    """Disjoint rational brackets, one distinct root each, inside the interval.

    Rational roots come back exact (zero-width bracket).  Roots of quadratic
    irreducible factors carry a closed-form surd.  Brackets for the remaining
    roots are bisected down to at most the requested width.
    """
    lo, hi = interval
    if not lo < hi:
        raise UsageError("empty interval")
    if width <= 0:
        raise UsageError("width must be positive")
    if p.is_zero():
        raise UsageError("cannot isolate roots of the zero polynomial")
    s = squarefree_part(p)
    records: list[RootRecord] = []
    linears, rest = _rational_root_factors(s)
    for lin in linears:
        root = -lin.coeff(0) / lin.coeff(1)
        if lo < root < hi:
            records.append(RootRecord(root, root, root, None,
                                      _decimal_of_fraction(root),
                                      _multiplicity_rational(p, root)))
    if rest.degree() >= 1:
        for endpoint in (lo, hi):
            if rest.eval(endpoint) == 0:  # cannot happen: no rational roots
                raise UsageError("endpoint is a root of an irrational factor")
        chain = sturm_chain(rest)
        surds = _quadratic_surds(rest) if rest.degree() == 2 else []
        stack = [(lo, hi)]
        while stack:
            a, b = stack.pop()
            count = _sign_changes(chain, a) - _sign_changes(chain, b)
            if count == 0:
                continue
            if count == 1 and b - a <= width:
                surd = None
                for cand in surds:
                    if (_surd_value_vs(*cand, a) > 0
                            and _surd_value_vs(*cand, b) < 0):
                        surd = cand
                decimal = (_decimal_of_surd(*surd) if surd is not None
                           else _decimal_of_fraction((a + b) / 2))
                records.append(RootRecord(a, b, None, surd, decimal,
                                          _multiplicity_bracket(p, a, b)))
                continue
            mid = (a + b) / 2
            if rest.eval(mid) == 0:  # unreachable: rest has no rational roots
                raise UsageError("bisection midpoint is a root")
            stack.append((a, mid))
            stack.append((mid, b))
    records.sort(key=lambda rec: rec.lo)
    return tuple(records)


def positive_on_interval(p: ParamPoly,
                         interval: tuple[Fraction, Fraction]) -> bool:
    """True when p > 0 on the whole open interval."""
    if p.is_zero():
        return False
    if count_roots_open(p, interval) > 0:
        return False
    mid = (interval[0] + interval[1]) / 2
    return p.eval(mid) > 0


# ---------------------------------------------------------------------------
# the invariant's vanishing locus


@dataclass(frozen=True)
class RootReport:
    """Vanishing locus of the invariant inside the validity interval."""

    param: str
    interval: tuple[Fraction, Fraction]
    width: Fraction
    invariant: RationalFunction
    roots: tuple[RootRecord, ...]
    poles_inside: tuple[Fraction, ...]
    messages: tuple[str, ...]


def fut_roots(f: RationalFunction, interval: tuple[Fraction, Fraction],
              width: Fraction = DEFAULT_WIDTH) -> RootReport:
    """Isolate the values inside the interval where f vanishes.

    Roots come from the numerator (the canonical form has no common
    factors); poles inside the interval are reported as diagnostics.
    """
    param = f.num.param
    messages: list[str] = []
    if f.is_zero():
        return RootReport(param, interval, width, f, (), (),
                          ("the invariant vanishes identically",))
    roots = isolate_roots(f.num, interval, width)
    poles: list[Fraction] = []
    if f.den.degree() >= 1:
        lin, rest = _rational_root_factors(f.den)
        for fac in lin:
            root = -fac.coeff(0) / fac.coeff(1)
            if interval[0] < root < interval[1]:
                poles.append(root)
        if rest.degree() >= 1 and count_roots_open(rest, interval) > 0:
            messages.append("irrational poles inside the interval")
    if poles:
        messages.append("poles inside the validity interval: %s"
                        % ", ".join(rat_text(x) for x in sorted(poles)))
    return RootReport(param, interval, width, f, roots,
                      tuple(sorted(poles)), tuple(messages))


# ---------------------------------------------------------------------------
# sampling and cross-validation


def sample_values(interval: tuple[Fraction, Fraction],
                  count: int) -> list[Fraction]:
    """Equispaced interior sample abscissae x_j = lo + j (hi-lo)/(count+1)."""
    if count < 1:
        raise UsageError("need at least one sample")
    lo, hi = interval
    return [lo + Fraction(j, count + 1) * (hi - lo) for j in range(1, count + 1)]


def sample_curve(f: RationalFunction, interval: tuple[Fraction, Fraction],
                 samples: int | list[Fraction]) -> list[tuple[Fraction, Fraction | None]]:
    """Evaluate exactly at the samples; a pole yields None for that abscissa."""
    xs = sample_values(interval, samples) if isinstance(samples, int) else [
        rat(x) for x in samples]
    out: list[tuple[Fraction, Fraction | None]] = []
    for x in xs:
        if f.den.eval(x) == 0:
            out.append((x, None))
        else:
            out.append((x, f.num.eval(x) / f.den.eval(x)))
    return out


@dataclass(frozen=True)
class SampleComparison:
    """The two computations of the invariant at one parameter value."""

    at: Fraction
    localized: Fraction
    toric: Fraction
    equal: bool


@dataclass(frozen=True)
class CrossValidationRecord:
    """Per-check outcome of the localization-versus-polytope comparison."""

    ok: bool
    validation: ValidationReport
    volumes_localized: tuple[RationalFunction, ...]
    volumes_toric: tuple[RationalFunction, ...]
    volume_match: tuple[bool, ...]
    fut_localized: RationalFunction
    fut_toric: RationalFunction
    fut_match: bool
    samples: tuple[SampleComparison, ...]
    minkowski: MinkowskiReport
    messages: tuple[str, ...]


def cross_validate(scn: LocalizationScenario, model: ToricModel,
                   samples: int | list[Fraction] = 5) -> CrossValidationRecord:
    """Compare the two computations of volumes and of the invariant.

    Equivariant volumes carry a factor of m! against Euclidean polytope
    volumes; invariants must agree exactly as rational functions, and at
    each requested sample the localization value must equal the value
    measured directly on freshly realized polytopes.  Any discrepancy is
    reported, never repaired.
    """
    if model.param != scn.param:
        raise UsageError("parameter names differ between scenario and model")
    if len(model.polytopes) != scn.bundles:
        raise UsageError("model has %d polytopes for %d bundles"
                         % (len(model.polytopes), scn.bundles))
    xs = sample_values(scn.interval, samples) if isinstance(samples, int) \
        else [rat(x) for x in samples]
    for x in xs:
        if not scn.interval[0] < x < scn.interval[1]:
            raise UsageError("sample %s is outside the validity interval"
                             % rat_text(x))
    messages: list[str] = []
    validation = validate_scenario(scn)
    if not validation.ok:
        messages.append("scenario validation failed")
    fact = math.factorial(scn.dimension)
    vols_loc: list[RationalFunction] = []
    vols_tor: list[RationalFunction] = []
    vol_match: list[bool] = []
    for alpha in range(scn.bundles):
        v_loc = volume_localized(scn, alpha)
        v_tor = RationalFunction.from_poly(
            volume_curve(model.polytopes[alpha], scn.interval).scale(fact))
        vols_loc.append(v_loc)
        vols_tor.append(v_tor)
        same = v_loc == v_tor
        vol_match.append(same)
        if not same:
            messages.append(
                "bundle %d volume mismatch: localization gives %s, "
                "polytope gives %s" % (alpha, v_loc.text(), v_tor.text()))
    f_loc = fut_localized(scn)
    f_tor = fut_toric(model, scn.interval)
    fut_same = f_loc == f_tor
    if not fut_same:
        messages.append("invariant mismatch: localization gives %s, "
                        "polytope gives %s" % (f_loc.text(), f_tor.text()))
    rows: list[SampleComparison] = []
    for x in xs:
        v_l = ratfun_eval(f_loc, x)
        v_t = fut_toric_at(model.polytopes, model.direction, x)
        rows.append(SampleComparison(x, v_l, v_t, v_l == v_t))
        if v_l != v_t:
            messages.append("invariant values differ at %s = %s: "
                            "localization %s, polytope %s"
                            % (scn.param, rat_text(x), rat_text(v_l),
                               rat_text(v_t)))
    mink = minkowski_check(model, scn.interval)
    if mink.status == "fail":
        messages.append("bundle polytopes do not sum to the ambient polytope")
    mid = (scn.interval[0] + scn.interval[1]) / 2
    for i, pp in enumerate(model.polytopes):
        rp = realize(pp, mid)
        if not all(rp.supported):
            unsupported = [j for j, s in enumerate(rp.supported) if not s]
            messages.append("polytope %d has redundant facets %s at the "
                            "midpoint" % (i, unsupported))
    ok = (validation.ok and all(vol_match) and fut_same
          and all(row.equal for row in rows)
          and mink.status != "fail"
          and not any(m.startswith("polytope") for m in messages))
    return CrossValidationRecord(ok, validation, tuple(vols_loc),
                                 tuple(vols_tor), tuple(vol_match),
                                 f_loc, f_tor, fut_same, tuple(rows), mink,
                                 tuple(messages))
