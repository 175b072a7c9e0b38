"""
Shared - excepciones y utilidades de bits comunes a todas las capas.
"""
