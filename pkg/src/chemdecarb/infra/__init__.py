"""Infrastructure: logging and table IO."""
