"""elva-pricing Levy models."""
from .nig import NIG
from .vg import VG
from .cgmy import CGMY
from .mjd import MJD
