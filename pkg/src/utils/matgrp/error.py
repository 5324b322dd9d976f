class SingularMatrixError(Exception):
    def __init__(self, what: str = "matrix"):
        super().__init__("Singular {} has no projective class or inverse".format(what))

class DimensionMismatchError(Exception):
    def __init__(self, left, right):
        super().__init__("Matrices of incompatible shape or field: {} and {}".format(left, right))

class IncompleteEnumerationError(Exception):
    def __init__(self, size: int, cap: int):
        super().__init__("Group enumeration stopped at {} elements (cap {}); result is incomplete".format(size, cap))

class NotInGroupError(Exception):
    def __init__(self, element):
        super().__init__("Element {} is not in the enumerated group".format(element))
