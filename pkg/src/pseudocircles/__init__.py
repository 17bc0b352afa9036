"""Combinatorial arrangements of pairwise intersecting pseudocircles."""
