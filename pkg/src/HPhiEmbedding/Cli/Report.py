#         Python H_Phi Embedding Library
#      Released under the MIT license
#

import datetime
import json
from enum import Enum
from importlib import metadata

import numpy as np

from . import ProblemSpec


TOOL_NAME = "hphi-embedding"


def tool_version():
    try:
        return metadata.version(TOOL_NAME)
    except metadata.PackageNotFoundError:
        return "unknown"


def to_jsonable(value):
    """
    Converts a result value into plain JSON types. Complex numbers become
    [re, im] pairs, arrays become nested lists and enumerations their names.
    """
    if value is None or isinstance(value, (bool, str)):
        return value

    if isinstance(value, Enum):
        return value.name

    if isinstance(value, dict):
        return {str(key): to_jsonable(entry) for key, entry in value.items()}

    if isinstance(value, np.ndarray):
        return [to_jsonable(entry) for entry in value.tolist()]

    if isinstance(value, (list, tuple)):
        return [to_jsonable(entry) for entry in value]

    if isinstance(value, (complex, np.complexfloating)):
        return ProblemSpec.complex_to_document(value)

    if isinstance(value, (np.bool_,)):
        return bool(value)

    if isinstance(value, (int, np.integer)):
        return int(value)

    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if np.isfinite(value) else repr(value)

    return repr(value)


class Report:
    """
    Result document of one command. The input problem is echoed so that the
    report can be re-run on its own.
    """

    def __init__(self, command, spec=None):
        self.command = command
        self.spec = spec
        self.fields = {}
        self.timestamp = datetime.datetime.now(datetime.timezone.utc).isoformat()

    def __setitem__(self, key, value):
        self.fields[key] = value

    def __getitem__(self, key):
        return self.fields[key]

    def __contains__(self, key):
        return key in self.fields

    def get(self, key, default=None):
        return self.fields.get(key, default)

    def to_document(self, with_timestamp=True):
        document = {
            "command": self.command,
            "tool": {"name": TOOL_NAME, "version": tool_version()},
        }

        if self.spec is not None:
            document["input"] = self.spec.to_document()
            document["seed"] = self.spec.seed

        document.update(to_jsonable(self.fields))

        if with_timestamp:
            document["timestamp"] = self.timestamp

        return document

    def to_json(self, with_timestamp=True):
        """
        Serializes the report. Floats are written in their shortest
        round-tripping form, which never needs more than 17 significant
        digits.

        :rtype: str
        """
        return json.dumps(self.to_document(with_timestamp), indent=2, sort_keys=True)

    def write(self, path, with_timestamp=True):
        with open(path, "w") as output_file:
            output_file.write(self.to_json(with_timestamp))
            output_file.write("\n")
