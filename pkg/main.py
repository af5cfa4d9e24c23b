"""
OneCenter: exact and approximate discrete 1-center solvers

Command-line entry point for:
1. Solving 1-center, 1-median and diameter instances
2. Generating hard and random instances
3. Verifying fast solvers against brute force
4. Benchmarking scaling behaviour
"""

import sys
from pathlib import Path

# Add project root to path for imports
project_root = Path(__file__).parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))


def main():
    """Main entry point for the OneCenter command line."""
    try:
        from cli.app import run_app
    except ImportError as e:
        print(f"Error: Missing dependency - {e}", file=sys.stderr)
        print("\nPlease install dependencies with:", file=sys.stderr)
        print("  pip install -r requirements.txt", file=sys.stderr)
        sys.exit(2)
    sys.exit(run_app())


if __name__ == "__main__":
    main()
