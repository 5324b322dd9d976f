class NotGeneratingError(Exception):
    def __init__(self, reached: int, total: int):
        super().__init__("Generators do not generate the group: reached {} of {} vertices ({:.4f})".format(
            reached, total, reached / total if total else 0.0))

class DuplicateGeneratorError(Exception):
    def __init__(self, position: int, element):
        super().__init__("Generator at position {} repeats an earlier one: {}".format(position, element))

class DenseCapExceededError(Exception):
    def __init__(self, n: int, cap: int):
        super().__init__("Graph with {} vertices exceeds the dense cap {}; use the iterative path".format(n, cap))

class IterativeConvergenceError(Exception):
    def __init__(self, which: str, residual: float, maxiter: int):
        super().__init__("Iterative eigensolver did not converge for {} within {} iterations (residual {})".format(
            which, maxiter, residual))

class SpectrumRangeError(Exception):
    def __init__(self, low: float, high: float):
        super().__init__("Spectrum [{}, {}] of the normalized adjacency is not inside [-1, 1] with top eigenvalue 1".format(low, high))

class MissingTrivialEigenvalueError(Exception):
    def __init__(self, value: float):
        super().__init__("Trivial eigenvalue {} expected but absent from the spectrum".format(value))

class ExpansionSizeError(Exception):
    def __init__(self, n: int, limit: int):
        super().__init__("Brute-force expansion needs at most {} vertices, got {}".format(limit, n))

class InvariantViolation(Exception):
    def __init__(self, invariant: str, detail: str = ""):
        super().__init__("Invariant '{}' violated{}".format(invariant, ": " + detail if detail else ""))
        self.invariant = invariant
