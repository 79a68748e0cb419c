"""Exact maxitive measures on finite spaces: Shilkret integrals, disjoint
variations, induced two-valued measures and Radon-Nikodym densities.

All values are exact tokens: "p/q", a bare nonnegative integer, or "inf".
Sets are lists of atom labels.
"""

from maxitive._core import *  # noqa: F401,F403
