class ClusterError(Exception):
    """Domain error raised by a cluster computation."""


class FormatError(ValueError):
    """An input file or text does not follow its schema."""


class InvalidArgumentError(ClusterError):
    """An operation was called outside its domain."""
