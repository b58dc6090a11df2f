"""Rigged configurations app package."""
