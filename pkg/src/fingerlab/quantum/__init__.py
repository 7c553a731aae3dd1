"""Complex state-set machinery: packings, frames, bases, SMP strategies."""

from .bounds import PackingBoundSet, packing_bounds  # noqa: F401
from .etf import check_etf, etf_complement  # noqa: F401
from .mub import mub_states  # noqa: F401
from .packing import GrassmannConfig, grassmann_search  # noqa: F401
from .smp import (  # noqa: F401
    etf_2m_strategy,
    etf_conjugate_strategy,
    smp_numeric_search,
    smp_support_projector,
    smp_wce,
    sym_strategy,
)
from .states import (  # noqa: F401
    OverlapReport,
    ProjectorBasis,
    StateSet,
    gram_matrix,
    max_pairwise_overlap,
    one_way_wce,
)
