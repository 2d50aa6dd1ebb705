"""Facility-level decarbonization pathways for building-block chemicals."""

__version__ = "0.1.0"
