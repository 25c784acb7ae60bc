"""Authenticated write-side library and the ptcatalog-admin command-line tool."""

from ptcatalog.admin.session import AdminSession

__all__ = ["AdminSession"]
