"""Exception types shared by every module.

Each error carries a CLI exit code so the command line front end can map
failures without inspecting messages.
"""


class NakaokaError(Exception):
    exit_code = 1


class ParseError(NakaokaError):
    exit_code = 2

    def __init__(self, message, pos=None, text=None):
        self.pos = pos
        self.text = text
        where = "" if pos is None else f" at position {pos}"
        super().__init__(f"{message}{where}")


class LevelError(NakaokaError):
    """Wrong level, wrong functor, or mismatched polynomial rings."""

    exit_code = 3


class DomainError(LevelError):
    pass


class UndecidedError(NakaokaError):
    exit_code = 4


class ResourceExceeded(NakaokaError):
    exit_code = 5


class NotPrimeError(NakaokaError):
    exit_code = 3


class UnsupportedError(NakaokaError):
    exit_code = 3
