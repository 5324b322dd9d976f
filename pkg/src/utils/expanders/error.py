class ClassificationError(Exception):
    def __init__(self, params: str, classification: str, attempts: int):
        super().__init__("Generated group for {} classified as {} after {} seeds".format(params, classification, attempts))

class CoverLiftError(Exception):
    def __init__(self, element, reason: str = "has no determinant-one preimage"):
        super().__init__("Generator {} {}".format(element, reason))

class UnknownFamily(Exception):
    def __init__(self, family: str):
        super().__init__("No family named {}".format(family))
