"""Context-adjusted RBI metrics built on win expectancy tables.

Thin wrapper over the compiled ``_core`` extension::

    import ctxrbi
    model = ctxrbi.WeModel("data/we_synthetic.csv")
    model.lookup(1, "bottom", 0, "000", 0)      # home win expectancy
    ctxrbi.alpha(0.2)                           # sigmoid, k = 4
    result = ctxrbi.compute("data/we_synthetic.csv", "data/season20_events.csv", min_rbi=5)
"""

from ._core import CtxRbiError, WeModel, alpha, beta, compute, pchip, score_event

__all__ = ["CtxRbiError", "WeModel", "alpha", "beta", "compute", "pchip", "score_event"]
__version__ = "0.1.0"
