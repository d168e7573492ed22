"""Python bindings for the hyerslab stability toolkit."""

from ._hyerslab import *  # noqa: F401,F403
from ._hyerslab import __doc__  # noqa: F401

__version__ = "1.0.0"
