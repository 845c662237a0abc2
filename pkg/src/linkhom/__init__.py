"""Self C2-equivalence and link-homotopy invariants of two-component links and string links."""

from .classify import Certificate, classify, classify_links, classify_string_links
from .diagram import (
    Diagram,
    DiagramError,
    change_crossing,
    closure,
    linking_number,
    lobe_linking,
    reflect,
    smooth,
    stack,
    validate,
)
from .fixtures import fixture
from .homotopy import (
    HomotopySummary,
    Trace,
    check_constraints,
    close_summary,
    generator_summary,
    run_trace,
    sigma_kirk,
    sigma_link,
    sigma_string,
)
from .polys import LaurentPoly, PolyPair, ZPoly
from .realization import Decomposition, GeneratorId, LinkLH, NotInCosetError, StringLC, StringLH, realize, recompose
from .skein import BACKEND, beta, beta_k, conway, string_betas

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Certificate",
    "Decomposition",
    "Diagram",
    "DiagramError",
    "GeneratorId",
    "HomotopySummary",
    "LaurentPoly",
    "LinkLH",
    "NotInCosetError",
    "PolyPair",
    "StringLC",
    "StringLH",
    "Trace",
    "ZPoly",
    "beta",
    "beta_k",
    "change_crossing",
    "check_constraints",
    "classify",
    "classify_links",
    "classify_string_links",
    "close_summary",
    "closure",
    "conway",
    "fixture",
    "generator_summary",
    "linking_number",
    "lobe_linking",
    "realize",
    "recompose",
    "reflect",
    "run_trace",
    "sigma_kirk",
    "sigma_link",
    "sigma_string",
    "smooth",
    "stack",
    "string_betas",
    "validate",
]
