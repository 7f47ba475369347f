"""Reproducible JSON certificates for every command.

A certificate embeds content digests of its inputs, the palette and
colours produced, every verdict with its caps and completeness flag,
and the claimed bound; identical invocations produce byte-identical
output except for the tool-version field.  Exit codes: 0 pass,
1 input/usage error, 2 verification counterexample.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from typing import Optional

from . import __version__
from .colouring import Colouring
from .verify import Verdict

SCHEMA_VERSION = 1

EXIT_PASS = 0
EXIT_INPUT_ERROR = 1
EXIT_COUNTEREXAMPLE = 2


def _digest(content: str) -> str:
    return hashlib.sha256(content.encode()).hexdigest()


def build_certificate(command: str, parameters: dict,
                      inputs: Optional[dict[str, str]] = None,
                      colouring: Optional[Colouring] = None,
                      verdicts: Optional[dict[str, Verdict]] = None,
                      bound: Optional[dict] = None,
                      extra: Optional[dict] = None) -> dict:
    cert: dict = {
        "schema": SCHEMA_VERSION,
        "tool": {"name": "nonrep", "version": __version__},
        "command": command,
        "parameters": parameters,
        "inputs": {name: {"sha256": _digest(content)}
                   for name, content in (inputs or {}).items()},
    }
    if colouring is not None:
        cert["colouring"] = {
            "palette": colouring.palette,
            "colours_used": colouring.colours_used(),
            "colours": list(colouring.colours),
        }
    if verdicts:
        cert["verdicts"] = {name: (v.to_dict() if isinstance(v, Verdict) else v)
                            for name, v in verdicts.items()}
    if bound is not None:
        cert["bound"] = bound
    if extra:
        cert.update(extra)
    cert["exit_code"] = certificate_exit_code(cert)
    return cert


def certificate_exit_code(cert: dict) -> int:
    for v in cert.get("verdicts", {}).values():
        if not v["passed"]:
            return EXIT_COUNTEREXAMPLE
    return EXIT_PASS


def certificate_to_json(cert: dict) -> str:
    return json.dumps(cert, sort_keys=True, indent=2) + "\n"


def write_certificate(cert: dict, path: str) -> None:
    """Atomic write: the file appears complete or not at all."""
    data = certificate_to_json(cert)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".cert-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise
