from __future__ import annotations

import os
from dataclasses import dataclass, field


def _env_max_order() -> int:
    value = os.environ.get("POMPEIU_MAX_ORDER")
    return int(value) if value else 360


@dataclass(frozen=True)
class Settings:
    max_order: int = field(default_factory=_env_max_order)
    # full O(n^3) associativity check up to this order, sampled above
    full_assoc_order: int = 64
    max_classes: int = 22
    # two-route witness cross-check runs up to this order
    cross_check_order: int = 16
    # classify: full powerset up to this order, translate-orbit representatives above
    full_enumeration_order: int = 8
    max_powerset_order: int = 16
    residual_tol: float = 1e-9
    root_cluster_tol: float = 1e-7
    max_cyclotomic_index: int = 1000


def settings() -> Settings:
    # re-read each call so POMPEIU_MAX_ORDER changes take effect
    return Settings()
