"""Exact Bridgeland stability computations on K3 lattices.

Every command of the ``bridgeland`` CLI is available through :func:`run`.
Numbers cross the boundary as strings ("3/4", "-2") so nothing is rounded.
"""

import json

from ._core import ComputationError, ValidationError, command_names, command_options
from ._core import run as _run

__all__ = [
    "ComputationError",
    "ValidationError",
    "command_names",
    "command_options",
    "run",
    "pairing",
    "charge",
    "phase_compare",
    "support",
    "walls",
    "nef",
    "classify_wall",
    "lagrangian",
]


def _option(value):
    if isinstance(value, (list, tuple)):
        return ",".join(str(x) for x in value)
    return str(value)


def run(command, documents=None, **options):
    """Run ``command`` and return its JSON result as a dict.

    ``documents`` maps document names (lattice, category, charge, walls) to
    dicts. Options use underscores for dashes. The ``plot`` command returns
    the SVG text under the key ``"svg"``.
    """
    opts = {k.replace("_", "-"): _option(v) for k, v in options.items() if v is not None}
    docs = {k: json.dumps(v) for k, v in (documents or {}).items()}
    out = _run(command, opts, docs)
    result = json.loads(out["json"])
    if out["text"]:
        result["svg"] = out["text"]
    return result


def _lattice(gram, ample):
    return {"lattice": {"gram": [[int(x) for x in row] for row in gram], "ample": list(ample), "k3": True}}


def pairing(v, w, gram, ample):
    return run("pairing", _lattice(gram, ample), v=v, w=w)


def charge(v, gram, ample, beta, omega):
    return run("charge", _lattice(gram, ample), v=v, beta=beta, omega=omega)


def phase_compare(z1, z2):
    """Compare phases of two charges given as (re, im); returns "LT", "EQ" or "GT"."""
    return run("phase-compare", z1=z1, z2=z2)["result"]


def support(gram, ample, beta, omega, **options):
    return run("support", _lattice(gram, ample), beta=beta, omega=omega, **options)


def walls(v, gram, ample, beta0, b, t, bound, **options):
    return run("walls", _lattice(gram, ample), v=v, beta0=beta0, b=b, t=t, bound=bound, **options)


def nef(v, gram, ample, beta, omega):
    return run("nef", _lattice(gram, ample), v=v, beta=beta, omega=omega)


def classify_wall(v, w, gram, ample, point=None):
    return run("classify-wall", _lattice(gram, ample), v=v, w=w, point=point)


def lagrangian(v, gram, ample, **options):
    return run("lagrangian", _lattice(gram, ample), v=v, **options)
