"""
Models package: monomials, ideals, graphs, covers and reports.
"""
