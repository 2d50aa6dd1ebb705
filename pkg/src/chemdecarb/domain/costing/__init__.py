"""Capital, energy and storage costs rolled into levelized costs of abatement."""

from chemdecarb.domain.costing.finance import (
    FinanceParams,
    PriceTable,
    RegionPrices,
    crf,
    load_finance,
    load_prices,
    locate_capex,
    outlay_profile,
    scale_capex,
)
from chemdecarb.domain.costing.learning import (
    LearningParams,
    LearningProfile,
    learning_multiplier,
    load_learning,
)
from chemdecarb.domain.costing.quotes import CostQuote, QuoteBasis, quote, quote_slice
from chemdecarb.domain.costing.transport import TsQuote, ts_unit_cost

__all__ = [
    "CostQuote",
    "FinanceParams",
    "LearningParams",
    "LearningProfile",
    "PriceTable",
    "QuoteBasis",
    "RegionPrices",
    "TsQuote",
    "crf",
    "learning_multiplier",
    "load_finance",
    "load_learning",
    "load_prices",
    "locate_capex",
    "outlay_profile",
    "quote",
    "quote_slice",
    "scale_capex",
    "ts_unit_cost",
]
