"""Exact convex-layer peeling of integer grids."""
