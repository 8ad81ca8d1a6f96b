"""Exact-arithmetic engine for the coupled degeneracy invariant of a family
of polarized spaces, computed from fixed-point data and cross-validated
against an independent moment-polytope oracle.
"""

from .analysis import (CrossValidationRecord, RootRecord, RootReport,
                       SampleComparison, count_roots_open, cross_validate,
                       fut_roots, isolate_roots, positive_on_interval,
                       sample_curve, sample_values, squarefree_part,
                       sturm_chain)
from .catalog import catalog_names, load
from .errors import (ComputationError, CrossValidationError,
                     DegenerateDatumError, EngineError, GeometryError,
                     InconsistentResidueError, ParseError, PoleError,
                     UsageError, ValidationError)
from .localization import (BundleRestriction, FixedComponent,
                           IsolatedPoint, IsolatedPointData,
                           LocalizationScenario, ValidationReport,
                           component_integral, fut_isolated, fut_localized,
                           isolated_data, isolated_point,
                           make_point_component, power_sum,
                           shift_hamiltonians, validate_scenario,
                           volume_localized)
from .polytopes import (Facet, MinkowskiReport, ParamPolytope,
                        RealizedPolytope, ToricModel, fut_toric,
                        fut_toric_at, linear_moment, minkowski_check,
                        moment_curve, realize, triangulate, volume,
                        volume_curve)
from .rationals import (ParamPoly, Rational, RationalFunction, interpolate,
                        parse_poly, poly_arith, poly_divmod, poly_gcd,
                        poly_text, rat, rat_text, ratfun_eval, ratfun_reduce,
                        render_factored)
from .rings import (EquivariantClass, Generator, NilpotentClass, Ring,
                    class_add, class_mul, equiv_mul, equiv_pow, integrate,
                    invert_unit, monomial_text, parse_monomial, point_ring,
                    ring_create)
from .report import ObstructionReport, ToricReport
from .scenario import (Scenario, load_scenario, parse_scenario,
                       scenario_from_dict, scenario_to_dict,
                       scenario_to_json)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
