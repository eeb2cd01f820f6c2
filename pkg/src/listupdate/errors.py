"""Exception types shared across the package."""


class ListUpdateError(Exception):
    """Base class for all errors raised by :mod:`listupdate`."""


class ContractViolation(ListUpdateError, ValueError):
    """An operation was called outside its precondition."""


class SizeLimitError(ContractViolation):
    """An exhaustive search was asked to run above its size limit."""


class ItemNotInList(ListUpdateError, LookupError):
    """A request names an item that is not in the list.

    ``index`` is the 0-based offset of the offending request in the
    sequence, or ``None`` when the lookup was not part of a run.
    """

    def __init__(self, item, index=None):
        self.item = item
        self.index = index
        where = "" if index is None else f" (request #{index})"
        super().__init__(f"item {item!r} is not in the list{where}")
