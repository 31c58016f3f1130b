"""
Ga^3-structures on split P^2-bundles over P^1.

Convenience entry point. For library use, import from ga3_bundles; `python -m ga3_bundles` works too.
"""

from ga3_bundles.main import main, run

__all__ = ["main", "run"]

if __name__ == "__main__":
    main()
