"""Output of solver and oracle records."""
