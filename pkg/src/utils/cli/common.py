'''
Run description and artifact writing shared by every command. Each file a
command writes carries the RunConfig and the tool version, and JSON is
written with sorted keys so equal runs give identical bytes.
'''

import json
import logging
import os
from dataclasses import asdict, dataclass, field
from enum import IntEnum
from typing import Any, Dict, List

import numpy as np
import pandas as pd
from tabulate import tabulate

from utils import __version__
from utils.args import FORMATS
from utils.config import Config
from utils.expanders import Settings

class ExitCode(IntEnum):
    OK = 0
    INTERNAL = 1
    UNSUPPORTED = 2
    DRIFT = 3

@dataclass
class RunConfig:
    command: str
    params: Dict[str, Any]
    seed: int
    settings: Settings
    output_dir: str
    formats: List[str] = field(default_factory=lambda: list(FORMATS))
    config: str = "Unsaved"

    @classmethod
    def from_args(cls, args, config: Config, params: Dict[str, Any], subdir: str = None) -> "RunConfig":
        tol = getattr(args, "tol", None)
        settings = Settings.from_config(config, cap=args.cap, dense_cap=args.dense_cap, eig_tol=tol, trivial_tol=tol)
        seed = args.seed if args.seed is not None else config.seed
        output_dir = args.out or os.path.join(config.output_dir, subdir or args.command)
        formats = sorted(set(args.formats)) if args.formats else list(FORMATS)
        return cls(args.command, {k: v for k, v in params.items() if v is not None}, seed, settings,
                   output_dir, formats, config.current_config)

    def wants(self, fmt: str) -> bool:
        return fmt in self.formats

    def path(self, filename: str) -> str:
        os.makedirs(self.output_dir, exist_ok=True)
        return os.path.join(self.output_dir, filename)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["params"] = dict(sorted(self.params.items()))
        return out

def _builtin(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError("Object of type {} is not JSON serializable".format(type(value).__name__))

def dumps(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, default=_builtin) + "\n"

def create_artifact(run: RunConfig, payload: dict) -> dict:
    return {"run_config": run.to_dict(), "version": __version__, **payload}

def write_json(run: RunConfig, filename: str, payload: dict) -> str:
    path = run.path(filename)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(create_artifact(run, payload)))
    logging.info("Wrote {}".format(path))
    return path

def write_csv(run: RunConfig, filename: str, frame: pd.DataFrame) -> str:
    '''CSV with the run description as leading comment lines'''
    path = run.path(filename)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write("# version {}\n".format(__version__))
        f.write("# run_config {}\n".format(json.dumps(run.to_dict(), sort_keys=True, default=_builtin)))
        frame.to_csv(f, index=False)
    logging.info("Wrote {}".format(path))
    return path

def summary(rows: List[dict], headers="keys") -> str:
    return tabulate(rows, headers=headers, floatfmt=".12g")
