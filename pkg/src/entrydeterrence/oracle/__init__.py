"""Brute-force verification of the closed-form results."""
