"""
Infrastructure - configuración, persistencia, exportación y logging.
"""
