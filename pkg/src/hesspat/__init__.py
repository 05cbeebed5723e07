"""Bruhat and h-Bruhat orders, Hessenberg GKM graphs and associated patterns."""

__version__ = "0.1.0"
