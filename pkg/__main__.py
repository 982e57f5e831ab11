"""Module entry point that runs the FibTile command line."""

import sys

def main() -> int:
    """Run the command line and return its exit status."""

    try:
        from main import main as run_cli
    except ModuleNotFoundError as exc:
        # Most common: the user is running outside the venv.
        if exc.name and exc.name.split(".")[0] in {"PySide6", "yaml", "sympy"}:
            print(
                f"{exc.name} is not installed in the active Python environment.\n"
                "Install the project and try again:\n\n"
                "  pip install -e .\n",
                file=sys.stderr,
            )
            return 2
        raise

    return run_cli()


if __name__ == "__main__":
    sys.exit(main())
