"""
Tests del módulo models: dataclasses de informes y su serialización.
"""
