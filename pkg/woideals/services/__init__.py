"""
Services package: cover enumeration, power computations, theorem checks and sweeps.
"""
