"""handspeak: bidirectional sign-language communication toolkit."""

__version__ = "0.1.0"
