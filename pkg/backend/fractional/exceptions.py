class FracToolkitError(Exception):
    """Base error for the toolkit; ``code`` is the stable CLI diagnostic tag."""

    code = 'error'

    def __str__(self):
        return f"{self.code}: {super().__str__()}"


class InvalidOrderError(FracToolkitError, ValueError):
    code = 'invalid-order'


class InvalidGridError(FracToolkitError, ValueError):
    code = 'invalid-grid'


class NonFiniteStateError(FracToolkitError, ArithmeticError):
    code = 'non-finite-state'

    def __init__(self, step, message=None):
        self.step = step
        super().__init__(message or f"non-finite value produced at step {step}")


class GridMismatchError(FracToolkitError, ValueError):
    code = 'grid-mismatch'


class NoEndemicRootError(FracToolkitError):
    code = 'no-endemic-root'


class DegenerateSignalError(FracToolkitError):
    code = 'degenerate-signal'


class UnknownColumnError(FracToolkitError, KeyError):
    code = 'unknown-column'

    def __str__(self):
        # KeyError would repr() the message otherwise
        return f"{self.code}: {self.args[0] if self.args else ''}"


class UnknownPresetError(FracToolkitError, KeyError):
    code = 'unknown-preset'

    def __str__(self):
        return f"{self.code}: {self.args[0] if self.args else ''}"


class InvalidParametersError(FracToolkitError, ValueError):
    code = 'invalid-params'
