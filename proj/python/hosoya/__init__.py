"""Determinant Hosoya triangle toolkit: exact entries, residue sieving,
prime census and composite-neighborhood certificates."""

from ._hosoya import *  # noqa: F401,F403
