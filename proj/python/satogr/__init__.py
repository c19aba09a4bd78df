"""Exact computations on the Sato Grassmannian: points, tau functions, hierarchy checks, curve data."""

import json as _json

from ._core import (  # noqa: F401
    Point,
    SatogrError,
    Series,
    det,
    hierarchy,
    is_ring_point,
    merge_even_odd,
    normalize_involution,
    orbit_profile,
    p0_membership,
    pfaffian,
    quotient_ring,
    schur,
    span_closure,
    stabilizer,
    tau,
    tau_bar,
)
from ._core import run_command as _run_command


def run(command, input_path, **knobs):
    """Run a CLI command in-process; returns (report dict, exit code)."""
    text, code = _run_command(command, str(input_path), knobs)
    return _json.loads(text), code
