"""Per-mode evaluation strategies and their compiled kernels."""

from .modes import (
    NormStrategy,
    SignStrategy,
    L1Strategy,
    MarginalStrategy,
    LdStrategy,
    strategy_for
)

__all__ = [
    'NormStrategy',
    'SignStrategy',
    'L1Strategy',
    'MarginalStrategy',
    'LdStrategy',
    'strategy_for',
]
