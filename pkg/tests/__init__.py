"""Unit tests for skewlab."""
