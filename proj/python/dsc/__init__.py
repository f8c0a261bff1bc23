"""Dynamic Shannon coding: static, adaptive, length-restricted, alphabetic and
unequal-letter-cost prefix coders with checked redundancy bounds."""

from ._core import (
    Error,
    algorithms,
    capacity,
    decode,
    encode,
    entropy,
    huffman_code,
    shannon_code,
    theorem_bound,
    verify,
)

__all__ = [
    "Error",
    "algorithms",
    "capacity",
    "decode",
    "encode",
    "entropy",
    "huffman_code",
    "shannon_code",
    "theorem_bound",
    "verify",
]
