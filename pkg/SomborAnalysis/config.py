"""
run configuration of the command-line front end

a JSON file given with --config supplies defaults, explicit flags win.
"""

from dataclasses import dataclass, fields, replace
from typing import Optional

from .degrees import DegreeSequence, normalize, parse_degrees
from .io.report import _load_json
from .oracle import DEFAULT_BUDGET, DEFAULT_TOLERANCE
from .weights import INDICES


COMMANDS = ("greedy", "index", "optimize", "enumerate", "verify", "sweep", "decompose", "survey")
FORMATS = ("text", "json", "dot", "csv")
STRATEGIES = ("first", "best")


@dataclass(frozen=True)
class RunConfig:
    '''
    everything one CLI invocation needs.

    fields:
    - command: one of COMMANDS
    - degree_sequence: DegreeSequence from -d, or None
    - input_path: tree file from --input, or None
    - output_format: one of FORMATS [default: text]
    - budget: enumeration budget, >= 1 [default: 10^7]
    - tolerance: comparison tolerance, > 0 [default: 1e-9]
    - seed: random seed [default: 0]
    '''

    command: str
    degree_sequence: Optional[DegreeSequence] = None
    input_path: Optional[str] = None
    output_format: str = "text"
    budget: int = DEFAULT_BUDGET
    tolerance: float = DEFAULT_TOLERANCE
    seed: int = 0
    max_n: int = 11
    trace: bool = False
    workers: int = 1
    strategy: str = "first"
    step_limit: Optional[int] = None
    index: Optional[str] = None
    output_path: Optional[str] = None
    verbose: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError("unknown command: \"%s\"" % self.command)
        if self.output_format not in FORMATS:
            raise ValueError("unknown `format` value: \"%s\"" % self.output_format)
        if self.strategy not in STRATEGIES:
            raise ValueError("unknown `strategy` value: \"%s\"" % self.strategy)
        if self.budget < 1:
            raise ValueError("budget must be >= 1, got %d" % self.budget)
        if not self.tolerance > 0:
            raise ValueError("tolerance must be > 0, got %r" % self.tolerance)
        if self.workers < 1:
            raise ValueError("workers must be >= 1, got %d" % self.workers)
        if self.step_limit is not None and self.step_limit < 1:
            raise ValueError("step_limit must be >= 1, got %d" % self.step_limit)
        if self.max_n < 2:
            raise ValueError("max_n must be >= 2, got %d" % self.max_n)
        if self.index is not None and self.index not in INDICES:
            raise ValueError("unknown index: \"%s\"" % self.index)
        if self.degree_sequence is not None and not isinstance(self.degree_sequence, DegreeSequence):
            object.__setattr__(self, "degree_sequence", _coerce_degrees(self.degree_sequence))

    def updated(self, **changes):
        """copy with the non-None `changes` applied."""
        return replace(self, **{key: value for key, value in changes.items() if value is not None})


def _coerce_degrees(value):
    if isinstance(value, str):
        return parse_degrees(value)
    return normalize(value)


# JSON keys accepted in a config file; "degrees" is an alias of degree_sequence
_FIELD_NAMES = {item.name for item in fields(RunConfig)} - {"command"}


def load_config(filename, command):
    '''
    RunConfig for `command` with defaults read from a JSON file.

    arguments:
    - filename: path of a JSON object, e.g. {"budget": 1000000, "tolerance": 1e-9}
    - command: the subcommand being run

    unknown keys raise ValueError.
    '''
    _raw = _load_json(filename)
    if not isinstance(_raw, dict):
        raise ValueError("config file must hold a JSON object: %s" % filename)

    _raw = dict(_raw)
    if "degrees" in _raw:
        _raw["degree_sequence"] = _raw.pop("degrees")
    _unknown = set(_raw) - _FIELD_NAMES
    if _unknown:
        raise ValueError("unknown config keys: %s" % ", ".join(sorted(_unknown)))
    return RunConfig(command=command, **_raw)
