"""Triple systems, special four-cycle detection and exact Turán numbers."""

from fourcycle._core import *  # noqa: F401,F403
from fourcycle._core import __doc__  # noqa: F401
