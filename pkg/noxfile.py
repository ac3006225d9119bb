"""Nox automation for testing, linting and producing result tables."""

import nox

# Use the current Python instead of requiring a specific version
nox.options.default_venv_backend = "none"

RESULTS_DIR = "tmp/results"


@nox.session(venv_backend="none")
def test(session):
    """Run the fast unit tests (ODE-heavy tests are marked slow and skipped)."""
    session.run("uv", "run", "pytest", "tests/", "-v", "--tb=short", "-m", "not slow", *session.posargs, external=True)


@nox.session(venv_backend="none")
def test_all(session):
    """Run every test including the slow oracle runs."""
    session.run("uv", "run", "pytest", "tests/", "-v", "--tb=short", *session.posargs, external=True)


@nox.session(venv_backend="none")
def lint(session):
    """Check formatting and lint rules with ruff."""
    session.run("uv", "run", "ruff", "format", "--check", "src", "tests", "noxfile.py", external=True)
    session.run("uv", "run", "ruff", "check", "src", "tests", "noxfile.py", external=True)


@nox.session(venv_backend="none")
def verify(session):
    """Run the verification suite for the toy parameters.

    Examples:
        nox -s verify                       # a1 = 3, b = 0.5, d = -0.1
        nox -s verify -- --d -0.5           # another shift
    """
    session.run("uv", "run", "susyscatter", "verify", "--out", f"{RESULTS_DIR}/verify.json", *session.posargs, external=True)


@nox.session(venv_backend="none")
def curves(session):
    """Write cross sections, phase shifts and the potential for the toy parameters."""
    for command in ("curves", "phases", "potential"):
        session.run("uv", "run", "susyscatter", command, "--out", f"{RESULTS_DIR}/{command}.csv", *session.posargs, external=True)


@nox.session(venv_backend="none")
def sweep(session):
    """Sweep the sigma_h resonance over d toward the spectral singularity."""
    d_flags = [flag for d in ("-1", "-0.5", "-0.2", "-0.1", "-0.05") for flag in ("--d", d)]
    session.run("uv", "run", "susyscatter", "sweep", *d_flags, "--out", f"{RESULTS_DIR}/sweep.csv", *session.posargs, external=True)
    session.run("uv", "run", "susyscatter", "fit", "--out", f"{RESULTS_DIR}/fit.csv", external=True)
