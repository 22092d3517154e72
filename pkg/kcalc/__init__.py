"""
kcalc - Atelier de calcul en K-théorie
"""
__version__ = '1.0.0'
