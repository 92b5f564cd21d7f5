"""HTTP service exposing the verification commands as JSON endpoints."""

from .app import app, create_app

__all__ = ["app", "create_app"]
