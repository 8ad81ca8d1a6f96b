"""Scenario files: JSON parsing and serialization.

A scenario file carries the fixed-point data (rings, components, bundle
restrictions, Euler classes), the parameter's validity interval, and an
optional toric block with the bundle polytopes, a preferred direction, and
the ambient polytope.  Parsing is strict: unknown ring names, malformed
expressions, and structural mismatches raise ParseError with the offending
location; semantic problems are left to validate_scenario.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .localization import (BundleRestriction, FixedComponent,
                           LocalizationScenario)
from .polytopes import ParamPolytope, ToricModel
from .rationals import (ParamPoly, RationalFunction, parse_poly, poly_text,
                        rat_text)
from .rings import (EquivariantClass, Generator, NilpotentClass, Ring,
                    monomial_text, parse_monomial, ring_create)


@dataclass(frozen=True)
class Scenario:
    """A localization data set together with its optional toric model."""

    localization: LocalizationScenario
    toric: ToricModel | None


def parse_scenario(text: str) -> Scenario:
    """Parse a scenario from JSON text."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON: %s" % exc)
    if not isinstance(raw, dict):
        raise ParseError("scenario file must be a JSON object")
    return scenario_from_dict(raw)


def load_scenario(path: str) -> Scenario:
    """Parse a scenario from a JSON file on disk."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_scenario(fh.read())
    except OSError as exc:
        raise ParseError("cannot read scenario file %s: %s" % (path, exc))


def _need(raw: dict, key: str, where: str):
    if key not in raw:
        raise ParseError("%s: missing field %r" % (where, key))
    return raw[key]


def _need_str(raw: dict, key: str, where: str) -> str:
    val = _need(raw, key, where)
    if not isinstance(val, str):
        raise ParseError("%s.%s: expected a string" % (where, key))
    return val


def _need_int(raw: dict, key: str, where: str) -> int:
    val = _need(raw, key, where)
    if not isinstance(val, int) or isinstance(val, bool):
        raise ParseError("%s.%s: expected an integer" % (where, key))
    return val


def _parse_fraction(text, where: str) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError("%s: expected an exact rational string" % where)
    try:
        return Fraction(text.replace("−", "-").strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError("%s: not an exact rational: %r" % (where, text))


def _parse_expr(text, param: str, where: str) -> ParamPoly:
    if isinstance(text, int):
        return ParamPoly.const(param, text)
    if not isinstance(text, str):
        raise ParseError("%s: expected an expression string" % where)
    try:
        return parse_poly(text, param)
    except ParseError as exc:
        raise ParseError("%s: %s" % (where, exc))


def _parse_class(raw, ring: Ring, where: str) -> NilpotentClass:
    if not isinstance(raw, dict):
        raise ParseError("%s: expected an object of monomial terms" % where)
    terms = {}
    for key, val in raw.items():
        try:
            exps = parse_monomial(ring, key)
        except ParseError as exc:
            raise ParseError("%s: %s" % (where, exc))
        poly = _parse_expr(val, ring.param, "%s.%s" % (where, key))
        terms[exps] = RationalFunction.from_poly(poly)
    return NilpotentClass.create(ring, terms)


def _parse_ring(name: str, raw, param: str) -> Ring:
    where = "rings.%s" % name
    if not isinstance(raw, dict):
        raise ParseError("%s: expected an object" % where)
    gens_raw = _need(raw, "generators", where)
    if not isinstance(gens_raw, list):
        raise ParseError("%s.generators: expected a list" % where)
    gens = []
    for i, g in enumerate(gens_raw):
        gw = "%s.generators[%d]" % (where, i)
        if not isinstance(g, dict):
            raise ParseError("%s: expected an object" % gw)
        gens.append(Generator(_need_str(g, "name", gw),
                              _need_int(g, "order", gw),
                              _need_int(g, "degree", gw)))
    top = _need(raw, "top", where)
    if not isinstance(top, dict) or not all(
            isinstance(v, int) for v in top.values()):
        raise ParseError("%s.top: expected generator-to-exponent map" % where)
    return ring_create(param, gens, top, _need_int(raw, "dimension", where))


def _parse_polytope(raw, param: str, ambient: int, where: str) -> ParamPolytope:
    if not isinstance(raw, dict):
        raise ParseError("%s: expected an object" % where)
    facets_raw = _need(raw, "facets", where)
    if not isinstance(facets_raw, list):
        raise ParseError("%s.facets: expected a list" % where)
    facets = []
    for i, f in enumerate(facets_raw):
        fw = "%s.facets[%d]" % (where, i)
        if not isinstance(f, dict):
            raise ParseError("%s: expected an object" % fw)
        normal = _need(f, "normal", fw)
        if (not isinstance(normal, list)
                or not all(isinstance(x, int) for x in normal)):
            raise ParseError("%s.normal: expected a list of integers" % fw)
        offset = _parse_expr(_need(f, "offset", fw), param, fw + ".offset")
        facets.append((tuple(normal), offset))
    return ParamPolytope.create(param, ambient, facets)


def scenario_from_dict(raw: dict) -> Scenario:
    """Build a scenario from parsed JSON data."""
    name = _need_str(raw, "name", "scenario")
    description = raw.get("description", "")
    note = raw.get("note", "")
    dimension = _need_int(raw, "dimension", "scenario")
    bundles = _need_int(raw, "bundles", "scenario")
    par = _need(raw, "parameter", "scenario")
    if not isinstance(par, dict):
        raise ParseError("parameter: expected an object")
    param = _need_str(par, "name", "parameter")
    iv = _need(par, "interval", "parameter")
    if not isinstance(iv, list) or len(iv) != 2:
        raise ParseError("parameter.interval: expected [lo, hi]")
    interval = (_parse_fraction(iv[0], "parameter.interval[0]"),
                _parse_fraction(iv[1], "parameter.interval[1]"))

    rings_raw = raw.get("rings", {})
    if not isinstance(rings_raw, dict):
        raise ParseError("rings: expected an object")
    rings = {rname: _parse_ring(rname, rraw, param)
             for rname, rraw in rings_raw.items()}

    comps_raw = _need(raw, "components", "scenario")
    if not isinstance(comps_raw, list):
        raise ParseError("components: expected a list")
    components = []
    for i, c in enumerate(comps_raw):
        cw = "components[%d]" % i
        if not isinstance(c, dict):
            raise ParseError("%s: expected an object" % cw)
        label = _need_str(c, "label", cw)
        ring_name = _need_str(c, "ring", cw)
        if ring_name not in rings:
            raise ParseError("%s.ring: unknown ring %r" % (cw, ring_name))
        ring = rings[ring_name]
        codim = _need_int(c, "codimension", cw)
        euler_raw = _need(c, "euler", cw)
        if not isinstance(euler_raw, dict):
            raise ParseError("%s.euler: expected an object" % cw)
        euler_scalar = RationalFunction.from_poly(_parse_expr(
            _need(euler_raw, "scalar", cw + ".euler"), param,
            cw + ".euler.scalar"))
        euler_nil = _parse_class(euler_raw.get("classes", {}), ring,
                                 cw + ".euler.classes")
        euler = EquivariantClass(euler_scalar, euler_nil)
        bnd_raw = _need(c, "bundles", cw)
        if not isinstance(bnd_raw, list):
            raise ParseError("%s.bundles: expected a list" % cw)
        restrictions = []
        for j, b in enumerate(bnd_raw):
            bw = "%s.bundles[%d]" % (cw, j)
            if not isinstance(b, dict):
                raise ParseError("%s: expected an object" % bw)
            ham = RationalFunction.from_poly(_parse_expr(
                _need(b, "hamiltonian", bw), param, bw + ".hamiltonian"))
            chern = _parse_class(b.get("chern", {}), ring, bw + ".chern")
            restrictions.append(BundleRestriction(ham, chern))
        components.append(FixedComponent(label, ring, codim, euler,
                                         tuple(restrictions)))

    loc = LocalizationScenario(name, description, note, param, dimension,
                               bundles, interval, tuple(components))

    toric = None
    if raw.get("toric") is not None:
        t = raw["toric"]
        if not isinstance(t, dict):
            raise ParseError("toric: expected an object")
        ambient = _need_int(t, "ambient", "toric")
        direction = _need(t, "direction", "toric")
        if (not isinstance(direction, list)
                or not all(isinstance(x, int) for x in direction)
                or len(direction) != ambient):
            raise ParseError("toric.direction: expected %d integers" % ambient)
        polys_raw = _need(t, "polytopes", "toric")
        if not isinstance(polys_raw, list):
            raise ParseError("toric.polytopes: expected a list")
        pps = tuple(_parse_polytope(p, param, ambient,
                                    "toric.polytopes[%d]" % i)
                    for i, p in enumerate(polys_raw))
        anti = None
        if t.get("anticanonical") is not None:
            anti = _parse_polytope(t["anticanonical"], param, ambient,
                                   "toric.anticanonical")
        toric = ToricModel(param, ambient, tuple(direction), pps, anti)
    return Scenario(loc, toric)


# ---------------------------------------------------------------------------
# serialization


def _class_to_dict(cls: NilpotentClass) -> dict:
    return {monomial_text(cls.ring, exps): _rf_text(coeff)
            for exps, coeff in cls.terms}


def _rf_text(rf: RationalFunction) -> str:
    if not rf.is_polynomial():
        raise ParseError("cannot serialize a non-polynomial coefficient")
    return poly_text(rf.to_poly())


def scenario_to_dict(scn: Scenario) -> dict:
    """Serialize to plain data that scenario_from_dict parses back equal."""
    loc = scn.localization
    rings: dict[str, dict] = {}
    ring_names: dict[Ring, str] = {}
    for comp in loc.components:
        if comp.ring not in ring_names:
            rname = "ring%d" % len(ring_names) if not comp.ring.generators else (
                "-".join(g.name for g in comp.ring.generators) + "-ring")
            base = rname
            k = 2
            while rname in rings:
                rname = "%s%d" % (base, k)
                k += 1
            ring_names[comp.ring] = rname
            rings[rname] = {
                "generators": [{"name": g.name, "order": g.order,
                                "degree": g.degree}
                               for g in comp.ring.generators],
                "top": {g.name: e for g, e in zip(comp.ring.generators,
                                                  comp.ring.top) if e},
                "dimension": comp.ring.dimension,
            }
    out = {
        "name": loc.name,
        "description": loc.description,
        "note": loc.note,
        "dimension": loc.dimension,
        "bundles": loc.bundles,
        "parameter": {
            "name": loc.param,
            "interval": [rat_text(loc.interval[0]), rat_text(loc.interval[1])],
        },
        "rings": rings,
        "components": [
            {
                "label": comp.label,
                "ring": ring_names[comp.ring],
                "codimension": comp.codimension,
                "euler": {
                    "scalar": _rf_text(comp.euler.scalar),
                    "classes": _class_to_dict(comp.euler.nilpotent),
                },
                "bundles": [
                    {
                        "hamiltonian": _rf_text(b.hamiltonian),
                        "chern": _class_to_dict(b.chern),
                    }
                    for b in comp.bundles
                ],
            }
            for comp in loc.components
        ],
    }
    if scn.toric is not None:
        t = scn.toric
        out["toric"] = {
            "ambient": t.ambient,
            "direction": list(t.direction),
            "polytopes": [_polytope_to_dict(pp) for pp in t.polytopes],
        }
        if t.anticanonical is not None:
            out["toric"]["anticanonical"] = _polytope_to_dict(t.anticanonical)
    return out


def _polytope_to_dict(pp: ParamPolytope) -> dict:
    return {"facets": [{"normal": list(f.normal), "offset": poly_text(f.offset)}
                       for f in pp.facets]}


def scenario_to_json(scn: Scenario) -> str:
    """Canonical JSON text (sorted keys, stable across runs)."""
    return json.dumps(scenario_to_dict(scn), indent=2, sort_keys=True) + "\n"
