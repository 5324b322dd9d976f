class MissingParameterError(Exception):
    def __init__(self, command: str, flag: str):
        super().__init__("{} needs --{}".format(command, flag))

class EmptySurveyError(Exception):
    def __init__(self, config_name: str):
        super().__init__("Config {} lists no survey entries".format(config_name))

class GoldenFormatError(Exception):
    def __init__(self, path: str, detail: str):
        super().__init__("Golden file {} is not usable: {}".format(path, detail))
