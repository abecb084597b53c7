"""Quantum reading of a digital memory: closed forms, Fock oracle, CLI."""
