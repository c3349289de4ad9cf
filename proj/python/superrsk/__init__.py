"""Shuffle-parameterized super-RSK insertion."""

import json

from ._core import enumerate, hook_schur, insert, phi, reverse, run_cli, standardize

__all__ = ["enumerate", "hook_schur", "insert", "phi", "reverse", "run_cli", "standardize", "verify"]


def verify(theorem, n=4, k=2, l=2, **options):
    """Run a verification check and return its JSON report as a dict.

    Extra keyword options map to command-line flags, e.g. ``mode="sample"``.
    """
    args = ["verify", "--theorem", str(theorem), "--n", str(n), "--k", str(k), "--l", str(l),
            "--format", "json"]
    for key, value in options.items():
        args += ["--" + key.replace("_", "-"), str(value)]
    code, out, err = run_cli(args)
    if code == 2:
        raise ValueError(err.strip())
    return json.loads(out)
