"""Shared exception types."""


class VerificationFailure(Exception):
    """A certificate check failed; ``check`` names the failing step."""

    def __init__(self, check: str, detail: str = ""):
        self.check = check
        self.detail = detail
        super().__init__(f"{check}: {detail}" if detail else check)
