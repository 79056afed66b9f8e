"""Proof-labeling schemes for geometric graph classes."""

from ._core import LcertError, bits, corrupt, generate, oracle, prove, schemes, verify

__all__ = ["LcertError", "bits", "corrupt", "generate", "oracle", "prove", "schemes", "verify"]
