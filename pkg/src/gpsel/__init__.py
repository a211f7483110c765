"""Bayesian variable selection for linear regression under Zellner g-priors.

Closed-form hypergeometric posteriors for the calibration-free hierarchical
priors, fixed-g, Zellner-Siow and empirical-Bayes alternatives, model
averaging, lasso / elastic net / Dantzig baselines and a benchmark harness.
"""

__version__ = "0.1.0"

from .bayes import (  # noqa: E402
    AIC, BIC, BRIC, EB_G, EB_L, HG2, HG3, HG4, NIMS, ZS_F, ZS_N,
    ModelScore, Selection, SelectorSpec, fit_selector, parse_selector,
)
from .data import Dataset, load_config, load_csv, write_report  # noqa: E402
from .models import ModelIndicator, enumerate_models  # noqa: E402
from .special import hyp2f1, log_hyp2f1  # noqa: E402

__all__ = [
    "AIC", "BIC", "BRIC", "EB_G", "EB_L", "HG2", "HG3", "HG4", "NIMS", "ZS_F", "ZS_N",
    "ModelScore", "Selection", "SelectorSpec", "fit_selector", "parse_selector",
    "Dataset", "load_config", "load_csv", "write_report",
    "ModelIndicator", "enumerate_models", "hyp2f1", "log_hyp2f1",
]
