"""Bundled proof-word data."""

from __future__ import annotations

from importlib import resources

from .proofwords import ProofWord, parse_proof


def e5_proof_text() -> str:
    """Text of the bundled 26-fourth-powers proof of the fifth Engel word."""
    return resources.files("powerproof").joinpath("data/e5_proof_26_powers.txt").read_text()


def e5_proof() -> ProofWord:
    """The bundled proof word, parsed."""
    return parse_proof(e5_proof_text())
