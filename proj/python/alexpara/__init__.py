"""Finite-poset algorithms and symbolic group oracles for Alexandroff
paratopological groups, backed by the C++ core."""

try:
    from ._alexpara import *  # noqa: F401,F403
    from ._alexpara import __version__  # noqa: F401
except ImportError:  # pragma: no cover - source checkouts without the extension
    from _alexpara import *  # noqa: F401,F403
    from _alexpara import __version__  # noqa: F401

__all__ = [
    "Poset",
    "CatalogEntry",
    "catalog_names",
    "catalog_build",
    "law_ids",
    "run_law",
    "count_labeled_posets",
    "verify_discreteness",
    "verify_topgroup_triviality",
    "psd_check",
    "sl_antichain_sample",
    "AlexparaError",
]
