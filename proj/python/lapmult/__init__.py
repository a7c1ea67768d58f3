"""Laplacian spectrum multiplicity toolkit."""

try:
    from ._lapmult import *  # noqa: F401,F403
except ImportError:  # built in-tree: the extension sits on sys.path unpackaged
    from _lapmult import *  # noqa: F401,F403
