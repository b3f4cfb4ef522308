"""Configuration module for the netcascade package."""

from netcascade.config.settings import Settings, get_settings

__all__ = ["Settings", "get_settings", "settings"]

# Singleton instance of settings
settings = get_settings()
