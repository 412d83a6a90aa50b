"""Exact counts of reflection factorizations of Coxeter elements in
well-generated complex reflection groups."""

import json
import os
from pathlib import Path

from ._reflekt import (
    BudgetExceededError,
    DataError,
    DomainError,
    EnumerationError,
    Error,
    Group as _Group,
    ParseError,
    canonical_spec,
    exp_minus_one_product,
    recover,
    recover_json,
)
from ._reflekt import table as _table

__all__ = [
    "BudgetExceededError",
    "DataError",
    "DomainError",
    "EnumerationError",
    "Error",
    "ParseError",
    "canonical_spec",
    "default_data_dir",
    "exp_minus_one_product",
    "group",
    "recover",
    "recover_json",
    "table",
    "verify",
]

_PACKAGED = Path(__file__).resolve().parent / "data" / "groups"


def default_data_dir():
    """Directory of group definitions: $REFLEKT_DATA_DIR, else the packaged copy."""
    if "REFLEKT_DATA_DIR" in os.environ or not _PACKAGED.is_dir():
        return None
    return _PACKAGED


def group(spec, data_dir=None, budget=1e8):
    """Build G<k>, G(r,1,n), G(m,m,2) or I2(m) and attach orbit multiplicities."""
    return _Group(spec, data_dir if data_dir is not None else default_data_dir(), budget)


def verify(spec, degree=None, chartable=None, data_dir=None):
    """Run every check on a group and return the report as a dict."""
    g = group(spec, data_dir)
    return json.loads(g.verify_json(degree, None if chartable is None else Path(chartable)))


def table(data_dir=None):
    return _table(data_dir if data_dir is not None else default_data_dir())
