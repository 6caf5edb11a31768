"""Rainbow and k-rainbow paths in properly edge-colored complete graphs.

Thin wrapper over the C++ extension: colorings of K_n, path structure
(multiplicity classes, rotations, maximality certificates), constructive
solvers with proven length guarantees, exact backtracking oracles, and the
Latin-square/transversal correspondence.
"""

try:
    from ._rainbow import *  # noqa: F401,F403  (installed layout)
    from ._rainbow import __doc__ as _core_doc  # noqa: F401
except ImportError:  # build-tree layout: extension next to this package on sys.path
    from _rainbow import *  # noqa: F401,F403
