"""Distance-unbalancedness of trees, subdivided stars and their continuous relaxation."""

from ._treeub import *  # noqa: F401,F403
from ._treeub import ValidationError, QuadratureError, __doc__  # noqa: F401

__version__ = "0.1.0"
