"""Exception types shared across the package."""


class ProtocolError(RuntimeError):
    """A protocol-level violation: missing or reused messages, bad rounds."""


class ConvergenceError(ProtocolError):
    """Consensus output unusable; run longer or with a finer state scale."""


class AssumptionError(ValueError):
    """A required graph property (connectivity, common neighbors) fails."""
