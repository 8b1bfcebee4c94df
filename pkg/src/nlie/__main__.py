"""Entry point for python -m nlie."""

from nlie.cli import app

if __name__ == "__main__":
    app()
