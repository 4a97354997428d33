"""Band counting, zeta functions and growth classification for string algebras."""

__version__ = "0.1.0"

from .analytics import (
    DOMESTIC, NON_DOMESTIC, Classification, PNTConstants, band_count_pi, classify,
    counting_report, euler_product_coefficients, mu_from_N, mu_from_pi, pnt_constants,
    pnt_ratio_table, zeta_coefficients,
)
from .corpus import load_corpus, load_presentation
from .errors import (
    ConvergenceError, InternalConsistencyError, ParseError, PreconditionError, PresentationError,
    ResourceLimitError, StringZetaError, ValidationError,
)
from .polynomial import IntegerPolynomial, spectral_radius
from .presentation import (
    Presentation, parse_presentation, prepare, tilde_presentation, validate_string_algebra,
    validate_zero_relation, window,
)
from .report import AnalyticsReport, analyze
from .state_graph import (
    BigIntSequence, adjacency, build_state_graph, export_dot, reciprocal_char_poly,
    scc_decompose, trace_powers,
)
from .strings import (
    BandClass, StringWord, canonical_band, classify_cyclic, enumerate_bands, enumerate_strings,
    format_word, is_band, is_string, parse_word,
)
