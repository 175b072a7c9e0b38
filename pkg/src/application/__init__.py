"""
Application - Casos de uso y puertos.

Este paquete orquesta la lógica de dominio del sistema de espacios de
consistencia: construir, analizar y auditar espacios.
"""
