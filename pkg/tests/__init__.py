"""
Test package for the superjac toolkit.
"""
