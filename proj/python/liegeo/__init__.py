"""Invariant Riemannian and Berwald-type Randers geometry on Lie groups.

The heavy lifting lives in the compiled extension; this package re-exports
its surface. Float-mode arithmetic backs every binding, plus exact-mode
verification entry points that return violation lists.
"""

from liegeo._core import *  # noqa: F401,F403
from liegeo._core import __version__  # noqa: F401
