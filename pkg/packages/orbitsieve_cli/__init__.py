from .cli import orbitsieve_cli

__all__ = ['orbitsieve_cli']
