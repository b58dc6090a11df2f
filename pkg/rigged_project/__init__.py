"""Rigged crystals Django project."""
