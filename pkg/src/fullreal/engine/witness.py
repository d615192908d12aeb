"""Self-centralizing elements of large order."""

from __future__ import annotations

from typing import Optional

from ..groups import GroupTable, centralizer


def is_self_centralizing(G: GroupTable, g: int) -> bool:
    return centralizer(G, [g]) == G.subgroup_generated([g])


def self_centralizing_witness(G: GroupTable, min_order: int) -> Optional[int]:
    """Smallest index ``g`` with ``|g| >= min_order`` and ``C_G(g) = <g>``."""
    for g in range(G.order):
        if G.orders[g] >= min_order and is_self_centralizing(G, g):
            return g
    return None


__all__ = ["is_self_centralizing", "self_centralizing_witness"]
