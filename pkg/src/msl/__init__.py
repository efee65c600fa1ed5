"""Pole orders of intertwining operators for GL_n through multisegment combinatorics."""

from .az import az_involution, speh_dual
from .core import (
    Multisegment,
    Segment,
    arranged_form,
    dual,
    grdim,
    is_balanced,
    is_ladder,
    is_regular,
    is_speh,
    parse_multisegment,
    precedes,
    serialize,
    sym_form,
)
from .pi_oracle import SampleConfig, generic_ext1, generic_hom, is_rigid_component, strongly_commute
from .poles import PoleReport, frak_d, lambda_L, lambda_nr, lambda_Z, pole_report
from .qrep import alpha, alpha_plus

__all__ = [
    "Multisegment", "Segment", "arranged_form", "dual", "grdim", "is_balanced", "is_ladder",
    "is_regular", "is_speh", "parse_multisegment", "precedes", "serialize", "sym_form",
    "az_involution", "speh_dual", "SampleConfig", "generic_ext1", "generic_hom",
    "is_rigid_component", "strongly_commute", "PoleReport", "frak_d", "lambda_L", "lambda_nr",
    "lambda_Z", "pole_report", "alpha", "alpha_plus",
]  # fmt: skip
