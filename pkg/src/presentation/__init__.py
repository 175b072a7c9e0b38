"""
Presentation - interfaz de línea de comandos.
"""
