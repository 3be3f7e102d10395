"""Exception hierarchy shared by all solver modules."""


class SuperstringError(Exception):
    """Base class for every error raised by this package."""


class InvalidString(SuperstringError, ValueError):
    """A string is empty or uses symbols outside the alphabet."""


class EmptyInstance(SuperstringError, ValueError):
    pass


class InvalidInstance(SuperstringError, ValueError):
    """An instance set has duplicates or a member contained in another."""


class MixedAlphabet(SuperstringError, ValueError):
    pass


class MonochromaticCircular(SuperstringError, ValueError):
    """The circular string lacks base or barred symbols."""


class InstanceTooLarge(SuperstringError):
    pass


class NoValidCandidate(SuperstringError):
    pass


class NoSolutionWithinBound(SuperstringError):
    pass


class PreconditionViolated(SuperstringError, ValueError):
    pass


class NotIndependent(SuperstringError, ValueError):
    pass


class NotMaximal(SuperstringError, ValueError):
    pass


class ValidationFailed(SuperstringError):
    pass
