"""Runtime configuration."""
from .settings import VERSION, Settings, get_settings

__all__ = ["VERSION", "Settings", "get_settings"]
