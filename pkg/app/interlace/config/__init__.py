from .settings import InterlaceSettings, get_cached_settings, load_settings, reset_settings_cache

__all__ = ["InterlaceSettings", "load_settings", "get_cached_settings", "reset_settings_cache"]
