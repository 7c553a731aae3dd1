"""fingerlab: one-sided-error fingerprinting strategy workbench."""

__version__ = "0.1.0"

from .families import (  # noqa: F401
    CoverParams,
    SubsetFamily,
    is_antichain,
    is_cover_free,
    search_largest_cover_free,
    sperner_number,
)
from .strategies import (  # noqa: F401
    ClassicalStrategy,
    ErrorReport,
    binary_completion,
    brute_force_min_wce,
    error_report,
    evaluate_p1,
    optimal_average_error,
    optimize_supports_one_way,
)
from .bounds import BoundInterval, BoundsEngine  # noqa: F401
from .tables import regenerate_table  # noqa: F401
