class UnsupportedConfigError(Exception):
    def __init__(self, reason: str):
        super().__init__("Unsupported configuration: {}".format(reason))

class DegenerateIdealError(Exception):
    def __init__(self, q: int, d: int, e: int, seed: int):
        super().__init__("Ideal choice degenerate for (q={}, d={}, e={}, seed={}); re-seed".format(q, d, e, seed))

class ConstructionError(Exception):
    def __init__(self, check: str, detail: str = ""):
        super().__init__("Construction check '{}' failed{}".format(check, ": " + detail if detail else ""))
