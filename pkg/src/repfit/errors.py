"""
Exceptions raised while fitting integral representations.
"""


class EmptyAtomGridError(ValueError):
    """No candidate atom locations were supplied."""


class NNLSConvergenceError(RuntimeError):
    """The active-set solver hit its iteration cap."""

    def __init__(self, iterations: int):
        self.iterations = iterations
        super().__init__(f"NNLS did not converge within {iterations} iterations")
