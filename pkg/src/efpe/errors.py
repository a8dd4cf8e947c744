"""Exception types shared across the package."""


class KeyFormatError(ValueError):
    """A master key string is malformed (wrong length or non-hex character)."""


class FormatError(ValueError):
    """A numeric string violates the cipher's input format."""
