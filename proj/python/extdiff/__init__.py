"""External difference families over finite groups.

The heavy lifting lives in the compiled ``_core`` module; this package
re-exports it and adds a couple of conveniences.
"""

from ._core import *  # noqa: F401,F403
from ._core import ExtdiffError, Family, Group, certify, parse_family

__all__ = [name for name in dir() if not name.startswith("_")]


def family(group: str, text: str) -> Family:
    """Family from the inline notation used by the command line, e.g. "0,1,2|3,6,9"."""
    return parse_family(group, text)


def lambda_matrix(f: Family):
    """Pairwise lambda values, None where a pair is not uniform."""
    return certify(f)["lambda_matrix"]
