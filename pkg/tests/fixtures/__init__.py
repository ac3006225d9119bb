"""Test fixtures for susyscatter tests."""
