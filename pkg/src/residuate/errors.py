"""Error types shared across the library and CLI.

Every error carries a short machine-readable ``code`` so the CLI can emit a
stable error object without pattern-matching on messages.
"""


class ResiduateError(Exception):
    """Base class; ``code`` is a stable machine-readable identifier."""

    code = "error"

    def __init__(self, detail, **extra):
        super().__init__(detail)
        self.detail = detail
        self.extra = extra

    def as_object(self):
        obj = {"error": self.code, "detail": self.detail}
        obj.update(self.extra)
        return obj


class InstanceMismatch(ResiduateError):
    code = "instance-mismatch"


class ShapeMismatch(ResiduateError):
    code = "shape-mismatch"


class UnknownLabel(ResiduateError):
    code = "unknown-label"


class ScalarError(ResiduateError):
    code = "bad-scalar"


class UnknownQuantale(ResiduateError):
    code = "unknown-quantale"


class FormatError(ResiduateError):
    code = "bad-format"


class JSONError(ResiduateError):
    code = "malformed-json"


class FileError(ResiduateError):
    code = "unreadable-file"


class GuardExceeded(ResiduateError):
    code = "guard-exceeded"


class NotEnumerable(ResiduateError):
    code = "not-enumerable"


class NotUnderApproximating(ResiduateError):
    code = "not-under-approximating"


class AmbientMismatch(ResiduateError):
    code = "ambient-mismatch"


class MembershipError(ResiduateError):
    code = "not-a-member"


class UsageError(ResiduateError):
    code = "usage"
