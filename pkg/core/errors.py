#!/usr/bin/env python3
"""
Error types for the Pascal geometry toolkit
Library errors are ValueError subclasses; the CLI maps them to exit codes
"""


class PascalError(ValueError):
    """Base class for all library errors"""


class ParseError(PascalError):
    """Malformed wire input (rational strings, JSON payloads)"""


class SymbolError(PascalError):
    """Malformed Pascal symbol or letter grid"""


class GeometryError(PascalError):
    """A geometric operation has no valid answer for its inputs"""


class CoincidentElementsError(GeometryError):
    """join/meet (or a construction built on them) received coincident elements"""


class IndeterminateLimitError(GeometryError):
    """A t-adic limit was taken of an all-zero triple"""


class DegenerationSpecError(GeometryError):
    """A DegenerationSpec does not satisfy its invariants"""


class ConcurrencyError(GeometryError):
    """An incidence asserted by a classical theorem failed to hold"""
