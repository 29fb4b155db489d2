"""Exact lattice path counts, redundant generating functions and cross-checks."""

from ._latpath import *  # noqa: F401,F403
from ._latpath import __doc__  # noqa: F401
