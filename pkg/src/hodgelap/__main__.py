"""python -m hodgelap forwards to the CLI."""

from .cli import main

if __name__ == "__main__":
    main()
