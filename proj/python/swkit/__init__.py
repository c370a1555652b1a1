"""Python front end for the swkit C++ core.

Data use the same JSON shape as the command line tool:
``{"q": 3, "n": 1, "places": [{"deg": 1, "kind": "inert", "lambda": [1]}]}``.
"""

import json

try:
    from . import _swkit
except ImportError:  # in-tree build: the extension sits next to the package
    import _swkit

Error = _swkit.Error
GuardExceeded = _swkit.GuardExceeded
InputError = _swkit.InputError
den_local = _swkit.den_local
functional_equation_check = _swkit.functional_equation_check
guard_scale = _swkit.guard_scale
isom_count_split = _swkit.isom_count_split
p_coh_grassmann_sum = _swkit.p_coh_grassmann_sum
p_coh_place = _swkit.p_coh_place
rho_dimension = _swkit.rho_dimension
set_guard_scale = _swkit.set_guard_scale
verify_main_identity = _swkit.verify_main_identity

SCHEMA = "swkit/1"


class VerificationFailed(Error):
    pass


def run(command, payload=None, budget=None):
    """Run a CLI command in-process; returns (exit_code, document)."""
    text = json.dumps(payload if payload is not None else {})
    code, out = _swkit.run_command(command, text, -1 if budget is None else budget)
    return code, json.loads(out)


def den(datum):
    """Density polynomial coefficients, lowest degree first."""
    _, doc = run("den", datum)
    return [int(c) for c in doc["coeffs"]]


def derivative(datum, r=(0,)):
    code, doc = run("derivative", dict(datum, r=list(r)))
    if code != 0:
        raise VerificationFailed("analytic and geometric sides differ")
    return [
        {"r": rec["r"], "analytic": int(rec["analytic"]), "geometric": int(rec["geometric"])}
        for rec in doc["records"]
    ]


def verify(suite="all", budget=None):
    _, doc = run("verify", {"suite": suite}, budget)
    return doc


__all__ = [
    "SCHEMA",
    "Error",
    "GuardExceeded",
    "InputError",
    "VerificationFailed",
    "den",
    "den_local",
    "derivative",
    "functional_equation_check",
    "guard_scale",
    "isom_count_split",
    "p_coh_grassmann_sum",
    "p_coh_place",
    "rho_dimension",
    "run",
    "set_guard_scale",
    "verify",
    "verify_main_identity",
]
