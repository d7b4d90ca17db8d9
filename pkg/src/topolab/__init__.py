"""topolab: exact computation over finite topological spaces.

Core surface:

  spaces       Space, validate_topology, closure/interior/min_open, subspaces
  operators    regular/semi/alpha/c*/pi classes, semi- and c*-closures
  gensets      SC*-closed sets, SC*-closure, generalized (g/rg/gSC*/SC*g) classes
  separation   separation axioms and SC*-regularity characterizations
  maps         finite maps, preservation properties, lemma instances
  enumeration  all topologies and maps at desk scale, canonical forms
  registry     registered claim checks, sweeps, implication search
  fixtures     bundled example catalog and the discrepancy report
"""

from .enumeration import (
    BoundExceeded,
    canonical_form,
    enumerate_maps,
    enumerate_topologies,
    homeomorphism_classes,
    labeled_topologies,
)
from .fixtures import FIXTURES, paper_report
from .maps import FiniteMap, classify_map, image, map_property, preimage, validate_map
from .registry import (
    THEOREM_IDS,
    SweepReport,
    UnknownTheorem,
    check_implication,
    replay_witness,
    run_suite,
    verify_theorem,
)
from .separation import axiom, classify_space, scstar_regular_variant
from .spaces import Space, parse_space_doc, space_doc, validate_topology

__all__ = [
    "BoundExceeded",
    "FIXTURES",
    "FiniteMap",
    "Space",
    "SweepReport",
    "THEOREM_IDS",
    "UnknownTheorem",
    "axiom",
    "canonical_form",
    "check_implication",
    "classify_map",
    "classify_space",
    "enumerate_maps",
    "enumerate_topologies",
    "homeomorphism_classes",
    "image",
    "labeled_topologies",
    "map_property",
    "paper_report",
    "parse_space_doc",
    "preimage",
    "replay_witness",
    "run_suite",
    "scstar_regular_variant",
    "space_doc",
    "validate_map",
    "validate_topology",
    "verify_theorem",
]
