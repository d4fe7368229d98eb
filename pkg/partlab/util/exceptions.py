class DomainException(Exception):
    exit_code = 1

    def __init__(self, error: str) -> None:
        super().__init__(error)
        self._error = error

    def error(self) -> str:
        return self._error


class SetSpecSyntaxError(DomainException):
    def __init__(self, error: str, position: int) -> None:
        super().__init__(f"{error} at position {position}")
        self.position = position


class InvalidInputError(DomainException):
    pass


class SetSemanticsError(DomainException):
    exit_code = 2


class NotCoprimeError(SetSemanticsError):
    pass


class SuiteFailedError(DomainException):
    exit_code = 3
