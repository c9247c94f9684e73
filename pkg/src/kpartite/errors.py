"""Exception hierarchy shared across the package."""


class KPartiteError(Exception):
    """Base class for errors raised by this package."""


class GraphTooLargeError(KPartiteError):
    """Input exceeds a size cap of the requested operation."""


class NonGraphicalError(KPartiteError):
    """Degree sequence is not realizable by any simple graph."""


class OutsideFamilyError(KPartiteError):
    """Graph is not degree-equivalent to a clique union / complete multipartite graph."""


class CanonicalGraphError(KPartiteError):
    """Graph is the canonical member of its degree-equivalence class, so no
    improved witness exists."""


class ProofStateError(KPartiteError):
    """Internal contradiction in the witness construction; indicates a violated
    precondition rather than a property of valid inputs."""


class FormatError(KPartiteError):
    """Malformed graph file or degree-sequence input."""
