"""
Quantile-based fractional cumulative residual entropy.

Can be imported using either:

    >>> import qfcre as qf

or:

    >>> from qfcre import *

"""
from .version import __version__

from .models import (
    FractionalOrder,
    QuantileModel,
    CATALOG,
    make_builtin,
    catalog_models,
    builtin_names,
    parse_model_spec,
    model_from_spec,
    hazard_quantile,
)

from .transforms import (
    affine,
    sum_compose,
    product_compose,
    reciprocal,
    phm,
    monotone_transform,
    escort,
)

from .calculations import (
    EntropyValue,
    Method,
    qfcre,
    qcre,
    quantile_shannon_entropy,
    shannon_bound_constant,
    escort_factorization,
    fcre_distribution_oracle,
)

from .dynamics import (
    qdfcre,
    qdfcre_profile,
)

from .estimator import (
    SampleData,
    EntropyEstimate,
    empirical_qdf,
    estimate_qfcre,
    estimate_qfcre_windowed,
)

from .fromtext import (
    CsvSpec,
    load_sample_txt,
    load_prices,
)

from .simulation import (
    SimulationReport,
    sample_model,
    bias_mse_study,
)

from .chaos import (
    LogisticConfig,
    logistic_series,
    chaos_entropy_sweep,
)

from .finance import (
    ReturnSeries,
    to_return_series,
    period_entropy,
    synthetic_two_regime,
)

from .config import (
    QuadratureConfig,
    get_quad_config,
)

from .errors import (
    ModelDomainError,
    ModelSpecError,
    SampleError,
    PriceDataError,
    DivergenceError,
    TailTruncationError,
    InfiniteHazardError,
    VerificationError,
)
