"""Codebreaking duel platform: classical ciphers over Z26, crib attacks,
challenge generation, and a timed offense/defense contest service."""

__version__ = "0.1.0"
