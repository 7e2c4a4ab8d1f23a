"""FastAPI service and shared request/response models."""

from .app import app, create_app

__all__ = ["app", "create_app"]
