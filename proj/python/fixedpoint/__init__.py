"""Checks and bounded enumeration for fixed-point data of circle actions."""

import json

from ._core import (
    ArithmeticOverflow,
    Datum,
    InvalidDatum,
    ParseError,
    SearchOverflow,
    canonicalize,
    check_index_identity,
    check_index_identity_series,
    check_modk,
    check_names,
    cp2_triple,
    enumerate,
    multiplicity,
    mutation_battery,
    negate,
    parse,
    profile,
    scale,
    serialize,
    sphere2,
    sphere6,
    weight_gcd,
)
from . import _core


def run_suite(datum, checks=None):
    """Run the check suite and return the report as a dict."""
    return json.loads(_core.run_suite_json(datum, checks))


def classify_report(survivors):
    return json.loads(_core.classify_report_json(list(survivors)))


__all__ = [
    "ArithmeticOverflow",
    "Datum",
    "InvalidDatum",
    "ParseError",
    "SearchOverflow",
    "canonicalize",
    "check_index_identity",
    "check_index_identity_series",
    "check_modk",
    "check_names",
    "classify_report",
    "cp2_triple",
    "enumerate",
    "multiplicity",
    "mutation_battery",
    "negate",
    "parse",
    "profile",
    "run_suite",
    "scale",
    "serialize",
    "sphere2",
    "sphere6",
    "weight_gcd",
]
