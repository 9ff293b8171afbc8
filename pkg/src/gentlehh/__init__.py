"""Hochschild cohomology of gentle algebras from the Avella-Alaminos--Geiss invariant.

Two independent routes to ``dim HH^n``: the closed formula in terms of the
invariant phi (:mod:`gentlehh.formula`) and the cochain complex of the
Bardzell resolution (:mod:`gentlehh.oracle`).
"""

from .ag import PhiInvariant, critical_cycles, euler_from_phi, phi, psi
from .formula import (
    SurfaceParams,
    TildeAParams,
    f3_series,
    g_series,
    h_closed_form,
    h_from_phi,
    h_surface,
    h_tilde_a,
    hh_dims_closed,
    infer_phi_partial,
)
from .generators import corpus, corpus_entry, random_gentle, relabel
from .oracle import DimSeries, hh_dims_oracle, verify_complex
from .quiver import (
    GentlePresentation,
    assign_signs,
    euler_characteristic,
    nonzero_paths,
    parse_presentation,
    serialize,
    validate_gentle,
)

__version__ = "0.1.0"
