"""elva-pricing Hull-White short rate model."""
from .hullwhite import HullWhiteParams
from .curve import FlatCurve, TabulatedCurve
