#!/usr/bin/env python3
"""
netlex - Social Network Structure Toolkit
Entry point for the nlex command.
"""


def main() -> None:
    """Main entry point for the nlex command."""
    from netlex.cli.main import cli

    cli()


if __name__ == "__main__":
    main()
