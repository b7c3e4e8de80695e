class PompeiuError(Exception):
    exit_code = 1


class GroupError(PompeiuError, ValueError):
    """Table or generator data that does not define a group."""

    exit_code = 2


class GroupFileError(GroupError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class PreconditionError(PompeiuError, ValueError):
    exit_code = 3


class OrderBoundError(PreconditionError):
    pass


class EmptySubsetError(PreconditionError):
    def __init__(self, message="subset must be nonempty"):
        super().__init__(message)


class GroupMismatchError(PreconditionError):
    def __init__(self, message="elements belong to different groups"):
        super().__init__(message)


class ConsistencyError(PompeiuError, AssertionError):
    """Two independent computation routes disagreed."""

    exit_code = 4
