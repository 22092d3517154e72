"""
Permet l'exécution via `python -m kcalc`
"""
import sys

from kcalc.ktheory.handler import main

if __name__ == '__main__':
    sys.exit(main())
