from orbitsieve_core import exactmath
from orbitsieve_core.types import BigInt

__all__ = [
    'BigInt',
    'exactmath',
]
