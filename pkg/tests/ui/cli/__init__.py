"""Tests for CLI functionality.""" 