"""Curvature and signature analysis of noncommutative polynomials."""

try:
    from ._nccurv import *  # noqa: F401,F403
    from ._nccurv import __version__  # noqa: F401
except ImportError:  # in-tree runs put the extension on sys.path directly
    from _nccurv import *  # noqa: F401,F403
    from _nccurv import __version__  # noqa: F401
