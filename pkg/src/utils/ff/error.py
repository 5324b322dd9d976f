class FieldMismatchError(Exception):
    def __init__(self, left: str, right: str):
        super().__init__("Operation between elements of different fields {} and {}".format(left, right))

class NotInTowerError(Exception):
    def __init__(self, base: str, top: str):
        super().__init__("Field {} is not a subfield in the tower of {}".format(base, top))

class ZeroInverseError(Exception):
    def __init__(self, field: str):
        super().__init__("Zero has no inverse in {}".format(field))

class InadmissibleIdealError(Exception):
    def __init__(self, q: int, e: int):
        super().__init__("No irreducible polynomial of degree {} over F_{} avoids the roots 0 and -1".format(e, q))

class ZeroNormError(Exception):
    def __init__(self, field: str):
        super().__init__("Norm equation N(c) = 0 has no solution with c in {}".format(field))

class EmbeddingNotFoundError(Exception):
    def __init__(self, source: str, target: str):
        super().__init__("No embedding of {} into {} was found".format(source, target))
