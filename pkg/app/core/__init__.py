from app.core.config import (
    CapacityLimits,
    Settings,
    default_limits,
    settings,
)
from app.core.logging import logger


__all__ = [
    "CapacityLimits",
    "Settings",
    "default_limits",
    "settings",
    "logger",
]
