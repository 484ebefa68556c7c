"""Witness sets with maximum induced degree 1 in Hamming graphs H(n,k)."""

from hamwit._core import *  # noqa: F401,F403
from hamwit._core import __version__  # noqa: F401
