"""Entrant profit, entry decision and accommodation/deterrence regions."""
