"""Run configuration: file parsing, defaults and validation."""
