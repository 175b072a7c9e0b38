"""
cspace - espacios de consistencia finitos.
"""
