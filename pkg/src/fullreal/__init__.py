"""Unit groups of quotients of F2[G] and full realizability of finite groups."""

__version__ = "0.1.0"
