"""Unit test package for fiasco."""
