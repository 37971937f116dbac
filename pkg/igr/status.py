from __future__ import annotations

import enum
from typing import Iterable


class Status(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    INDETERMINATE = "indeterminate"

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self]

    @staticmethod
    def worst(statuses: Iterable[Status]) -> Status:
        """A quantitative failure outranks an undecided verdict.

        >>> Status.worst([Status.PASS, Status.INDETERMINATE])
        <Status.INDETERMINATE: 'indeterminate'>
        >>> Status.worst([Status.INDETERMINATE, Status.FAIL])
        <Status.FAIL: 'fail'>
        >>> Status.worst([])
        <Status.PASS: 'pass'>
        """
        seen = set(statuses)
        if Status.FAIL in seen:
            return Status.FAIL
        if Status.INDETERMINATE in seen:
            return Status.INDETERMINATE
        return Status.PASS


_EXIT_CODES = {Status.PASS: 0, Status.FAIL: 2, Status.INDETERMINATE: 3}
