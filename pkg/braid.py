"""
Command-line entry point for the braid toolkit.

    python braid.py compare -n 3 "" "1"
    python braid.py verify --trials 1
"""

from core.cli import main

if __name__ == "__main__":
    main()
