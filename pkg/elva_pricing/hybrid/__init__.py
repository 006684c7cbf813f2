"""Hybrid tree and finite difference pricer."""
from .parameter import HybridConfig
from .pricer import price, surrender_premium, exercise_region, exercise_regions
