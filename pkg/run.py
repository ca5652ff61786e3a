"""
Entry point for the woideals command line.
"""
from woideals import create_cli

cli = create_cli()

if __name__ == '__main__':
    cli()
