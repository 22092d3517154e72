"""
kcalc.ktheory - Calculs exacts et numériques de K-théorie
Tout le code métier de kcalc est contenu dans ce dossier
"""
from kcalc.ktheory.handler import main as kcalc_main
from kcalc.ktheory.orchestrator import KCalcOrchestrator

__all__ = ['KCalcOrchestrator', 'kcalc_main']
