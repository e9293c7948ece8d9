# Command-line entry point: python -m cli.main <subcommand>
