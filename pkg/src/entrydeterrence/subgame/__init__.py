"""Second-period Bertrand price competition after entry."""
