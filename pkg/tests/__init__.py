"""Tests for pdrazin."""
