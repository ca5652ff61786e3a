"""
Command modules; each exposes a `commands` list registered by create_cli.
"""
