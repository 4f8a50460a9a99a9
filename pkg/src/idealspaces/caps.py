"""Enumeration caps.

Every exhaustive enumeration in the package is bounded by an explicit cap and
raises :class:`~idealspaces.errors.CapExceeded` instead of truncating.  The
defaults keep the whole default suite comfortably sub-minute.
"""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Caps:
    max_ring_size: int = 64
    max_ideals: int = 4096
    max_points: int = 24
    max_closed_sets: int = 100_000
    max_hom_product: int = 4096  # cap on |R| * |R'| for hom enumeration

    def with_overrides(self, **kw):
        """Return a copy with the given fields replaced (None values ignored)."""
        kw = {k: v for k, v in kw.items() if v is not None}
        return replace(self, **kw) if kw else self


DEFAULT_CAPS = Caps()
