"""The HTTP registry service: authenticated CRUD with file-backed persistence."""

from ptcatalog.service.app import create_app
from ptcatalog.service.store import RegistryStore, StoreSnapshot

__all__ = ["RegistryStore", "StoreSnapshot", "create_app"]
