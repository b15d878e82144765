"""Command-line front end and the bundle-expression parser."""
from .parser import ParseError, parse, parse_bundle, parse_complex, to_bundle, to_complex

__all__ = ["ParseError", "parse", "parse_bundle", "parse_complex", "to_bundle", "to_complex"]
