"""Golden data for the bundled reference codes."""
