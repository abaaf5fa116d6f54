"""Executable mereotopology over three exact models.

- ``lo`` and ``mereo``: a finite logic of names and the quasi-Boolean
  mereology of all nonempty subsets of a small atom base.
- ``regopen``: regular open subsets of the rational line in canonical form.
- ``geometry``: a point-free geometry of exact-rational open disks with
  three-valued region containment.
- ``kuratowski``: a model-generic checker for the interior topology axioms,
  instantiated by all three models.
- ``scene``, ``query``, ``suites``, ``render``: the file format, query DSL,
  law-suite runner, and SVG emitter behind the ``mt`` command.
"""

from .common import NEG_INF, POS_INF, UNDEFINED_MEET, Rat, UndefinedMeet
from .kuratowski import LawReport, LawResult, TopologySpec, check_laws, check_prod_partiality
from .lo import LOModel, Name, eq_plural, eq_singular, eta, incl, iota, is_individual
from .mereo import QBAModel
from .regopen import (
    RegOpen1D,
    boundary_m1d,
    closure_m1d,
    compl1d,
    interior1d,
    join1d,
    meet1d,
    part_of1d,
    regularize,
)
from .scene import Diagnostic, DiagnosticError, Scene, format_scene, parse_scene
from .suites import SuiteResult, run_suite

__all__ = [
    "NEG_INF",
    "POS_INF",
    "UNDEFINED_MEET",
    "Rat",
    "UndefinedMeet",
    "LawReport",
    "LawResult",
    "TopologySpec",
    "check_laws",
    "check_prod_partiality",
    "LOModel",
    "Name",
    "eq_plural",
    "eq_singular",
    "eta",
    "incl",
    "iota",
    "is_individual",
    "QBAModel",
    "RegOpen1D",
    "boundary_m1d",
    "closure_m1d",
    "compl1d",
    "interior1d",
    "join1d",
    "meet1d",
    "part_of1d",
    "regularize",
    "Diagnostic",
    "DiagnosticError",
    "Scene",
    "format_scene",
    "parse_scene",
    "SuiteResult",
    "run_suite",
]

__version__ = "0.1.0"
