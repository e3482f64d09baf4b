"""Configuration and logging shared by every shannonlab subpackage."""
