"""Canonical-stream mapping strategies."""
