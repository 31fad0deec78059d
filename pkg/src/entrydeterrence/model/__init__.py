"""Market primitives, assumption checks and monopoly benchmark."""
