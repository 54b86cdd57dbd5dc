"""Exact combinatorics and graph algorithms, backed by the C++ core."""

from ._combi import *  # noqa: F401,F403
from ._combi import __doc__  # noqa: F401
