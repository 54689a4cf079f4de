"""Python surface of the particle-MCMC toolkit.

The compiled module is packaged as arpmc._arpmc by the wheel build; when
the extension is built standalone (plain CMake), it sits on sys.path as a
top-level module instead.
"""

try:
    from ._arpmc import *  # noqa: F401,F403
    from ._arpmc import rng_algorithm  # noqa: F401
except ImportError:  # pragma: no cover - build-tree layout
    from _arpmc import *  # noqa: F401,F403
    from _arpmc import rng_algorithm  # noqa: F401
