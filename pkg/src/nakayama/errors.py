class ContradictionReport(AssertionError):
    """A checked identity failed; carries the check name and a witness."""

    def __init__(self, check: str, witness=None, algebra=None):
        where = f" on {algebra}" if algebra is not None else ""
        super().__init__(f"{check} failed{where}: {witness!r}")
        self.check = check
        self.witness = witness
        self.algebra = algebra
