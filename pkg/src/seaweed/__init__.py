"""Index computations for seaweed subalgebras of sl(n) and sp(2n)."""

from .compositions import Composition, SeaweedSpec, SpecError, parse_spec
from .homotopy import HomotopyType, homotopy_type
from .meander import (
    Meander,
    associated_permutation,
    build_meander,
    components,
    index,
    index_via_permutation,
    meander_index,
)
from .oracle import index_oracle, oracle_report
from .panyushev import index_c
from .signature import index_via_signature, wind_down, wind_up

__version__ = "0.1.0"

__all__ = [
    "Composition",
    "SeaweedSpec",
    "SpecError",
    "parse_spec",
    "HomotopyType",
    "homotopy_type",
    "Meander",
    "associated_permutation",
    "build_meander",
    "components",
    "index",
    "index_via_permutation",
    "meander_index",
    "index_oracle",
    "oracle_report",
    "index_c",
    "index_via_signature",
    "wind_down",
    "wind_up",
]
