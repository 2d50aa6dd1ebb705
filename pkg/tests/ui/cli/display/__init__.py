"""Tests for CLI display functionality.""" 