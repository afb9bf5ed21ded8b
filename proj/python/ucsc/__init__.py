"""Union-closed set family laboratory: Python surface over the C++ core."""

try:
    from ._ucsc import *  # noqa: F401,F403
    from ._ucsc import __doc__ as _core_doc  # noqa: F401
except ImportError:  # module built outside the package (e.g. plain CMake build dir)
    from _ucsc import *  # noqa: F401,F403
