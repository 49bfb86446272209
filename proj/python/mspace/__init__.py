"""Finite metric spaces: axiom audits, chain components, ultrametrics,
metrization of quasimetrics, Hölder orders and fractal corpora."""

from ._core import *  # noqa: F401,F403
from ._core import MspaceError, __doc__  # noqa: F401

__version__ = "0.1.0"
