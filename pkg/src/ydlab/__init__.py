"""Exact Hopf and Yetter-Drinfeld algebra over Q(i) on finite-group models."""

__version__ = "0.1.0"
