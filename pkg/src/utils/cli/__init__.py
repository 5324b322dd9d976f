import logging
from argparse import Namespace

from utils.config import Config, UnknownField, UnknownFile
from utils.ff import InadmissibleIdealError
from utils.lsv import UnsupportedConfigError

from .commands import cmd_construct, cmd_family, cmd_regress, cmd_survey, cmd_verify
from .common import ExitCode, RunConfig, write_csv, write_json
from .error import EmptySurveyError, GoldenFormatError, MissingParameterError

UNSUPPORTED = (UnsupportedConfigError, InadmissibleIdealError, UnknownFile, UnknownField,
               MissingParameterError, EmptySurveyError)

def run(args: Namespace) -> int:
    '''Dispatch a parsed command line; every failure becomes an exit code'''
    config = Config()
    try:
        if args.config:
            config.load_from_name(args.config)
        match args.command:
            case "construct":
                return int(cmd_construct(args, config))
            case "verify":
                return int(cmd_verify(args, config))
            case "survey":
                return int(cmd_survey(args, config))
            case "regress":
                return int(cmd_regress(args, config))
            case "family":
                return int(cmd_family(args, config))
            case _:
                raise ValueError("Unknown command {}".format(args.command))
    except UNSUPPORTED as err:
        logging.error("Unsupported configuration: {}".format(err))
        return int(ExitCode.UNSUPPORTED)
    except Exception as err:
        logging.error("{}: {}".format(type(err).__name__, err), exc_info=getattr(args, "log_level", None) == "DEBUG")
        return int(ExitCode.INTERNAL)
