"""Default cascades in banking networks driven by fire-sale asset discounts."""

__version__ = "0.1.0"

__all__ = ["__version__"]
