"""Least squares Monte Carlo pricer with sector regressions."""
from .parameter import LsmcConfig
from .paths import PathSet, simulate_paths
from .pricer import backward_induction, apply_rule, price_no_surrender, \
    surrender_premium, confidence_interval
