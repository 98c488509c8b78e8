"""TODIM ranking under probabilistic hesitant, hesitant and crisp assessments."""

try:
    from ._todim import *  # noqa: F401,F403
except ImportError:  # in-tree build: the extension sits next to the package
    from _todim import *  # type: ignore  # noqa: F401,F403

__version__ = "1.0.0"
