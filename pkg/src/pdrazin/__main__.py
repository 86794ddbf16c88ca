"""
Main entry point for pdrazin.
Usage: python -m pdrazin
"""

from .cli import app


def main() -> None:
    """Run the command line; exits with the command's exit code."""
    app(prog_name="pdrazin")


if __name__ == "__main__":
    main()
