"""Generators for the three hardness reductions, certificate extraction,
brute-force oracles for the source problems, and structural checks."""

from .mmo import (
    MmoInstance,
    MmoMap,
    extract_orientation,
    gadget_from_mmo,
    mmo_brute,
    outdegrees,
)
from .sat import (
    CnfFormula,
    SatMap,
    extract_assignment,
    gadget_from_3b2sat,
    parse_dimacs,
    sat_brute,
    to_dimacs,
)
from .structure import StructureError, StructureReport, check_gadget_structure
from .tvdp import (
    DisjointPathsCertificate,
    PathTraceError,
    TvdpInstance,
    TvdpMap,
    check_certificate,
    extract_disjoint_paths,
    gadget_from_tvdp,
    tvdp_brute,
)

__all__ = [
    "CnfFormula",
    "DisjointPathsCertificate",
    "MmoInstance",
    "MmoMap",
    "PathTraceError",
    "SatMap",
    "StructureError",
    "StructureReport",
    "TvdpInstance",
    "TvdpMap",
    "check_certificate",
    "check_gadget_structure",
    "extract_assignment",
    "extract_disjoint_paths",
    "extract_orientation",
    "gadget_from_3b2sat",
    "gadget_from_mmo",
    "gadget_from_tvdp",
    "mmo_brute",
    "outdegrees",
    "parse_dimacs",
    "sat_brute",
    "to_dimacs",
    "tvdp_brute",
]
