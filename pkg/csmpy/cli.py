#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This file is part of the
#   csmpy Project.
# License: MIT

# =============================================================================
# DOCS
# =============================================================================

"""Command line interface.

Subcommands: ``family``, ``spectrum``, ``jack``, ``verify``,
``pseudomomenta``, ``prefactor`` and ``young``. Every command builds a
JSON-compatible payload; ``--output text`` renders the same payload as
indented text. Exact values are always printed as exact strings.

Exit codes: 0 success, 1 usage or input error, 2 verification failure,
3 degenerate diagonal.

"""

# =============================================================================
# IMPORTS
# =============================================================================

import argparse
import json
import logging
import sys
from fractions import Fraction

import attr

from . import (
    __version__, cache, core, partitions as parts, scalars, spectrum,
    states as sts, symfunc, validators as vlds)


# =============================================================================
# CONSTANTS
# =============================================================================

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2
EXIT_DEGENERATE = 3

NAMED_COUPLINGS = {
    "zonal-half": Fraction(1, 2),
    "schur": Fraction(1),
    "zonal": Fraction(2)}

OUTPUTS = ("json", "text")


class UsageError(Exception):
    """Bad command line."""


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting with code 2."""

    def error(self, message):
        raise UsageError(message)


# =============================================================================
# CONFIGURATION
# =============================================================================

def parse_values(text):
    """``"6,4,3,1"`` -> ``[6, 4, 3, 1]``."""
    try:
        return [int(v) for v in str(text).split(",") if v.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected comma separated integers, got {!r}".format(text))


def parse_floats(text):
    """``"0,0.5"`` -> ``[0.0, 0.5]``."""
    try:
        return [float(v) for v in str(text).split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected comma separated numbers, got {!r}".format(text))


def parse_torus(text):
    """``"N=3"`` or ``"3"`` -> 3."""
    text = str(text)
    if text.upper().startswith("N="):
        text = text[2:]
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected N=<int>, got {!r}".format(text))


def resolve_coupling(coupling, lam, branch):
    """The single coupling specified on the command line.

    Raises
    ------
    UsageError
        If both ``--coupling`` and ``--lambda`` are given.

    """
    if coupling is not None and lam is not None:
        raise UsageError("give either --coupling or --lambda, not both")
    if lam is not None:
        return scalars.Coupling.from_lambda(lam, scalars.Branch(branch))
    if coupling is None:
        return scalars.Coupling.symbolic()
    if coupling.lower() in NAMED_COUPLINGS:
        return scalars.Coupling.fixed(NAMED_COUPLINGS[coupling.lower()])
    try:
        return scalars.Coupling.parse(coupling)
    except ValueError as err:
        raise UsageError(str(err))


@attr.s(frozen=True)
class RunConfig:
    """Validated settings of one command line run."""

    command = attr.ib()
    coupling = attr.ib()
    values = attr.ib(default=None)
    n_particles = attr.ib(default=None)
    output = attr.ib(default="json", validator=attr.validators.in_(OUTPUTS))
    cache_dir = attr.ib(default=None)
    options = attr.ib(factory=dict)

    @n_particles.validator
    def _validate_n_particles(self, attribute, value):
        if value is not None:
            vlds.validate_n_particles(value)

    @classmethod
    def from_args(cls, args):
        """Build from an argparse namespace."""
        reserved = {
            "command", "coupling", "lam", "branch", "values",
            "n_particles", "output", "cache_dir", "log_level"}
        options = {
            k: v for k, v in vars(args).items() if k not in reserved}
        return cls(
            command=args.command,
            coupling=resolve_coupling(args.coupling, args.lam, args.branch),
            values=getattr(args, "values", None),
            n_particles=args.n_particles,
            output=args.output,
            cache_dir=args.cache_dir,
            options=options)

    @property
    def cache(self):
        """The result cache, or None."""
        return cache.ResultCache.from_env(self.cache_dir)


# =============================================================================
# COMMANDS
# =============================================================================

def _state(config):
    return sts.make_state(config.values)


def _require_fixed(config):
    if config.coupling.is_symbolic:
        raise UsageError(
            "{} needs a fixed coupling (--coupling or --lambda)".format(
                config.command))
    return config.coupling.value


def cmd_family(config):
    """Squeeze graph of a root state."""
    graph = sts.build_squeeze_graph(_state(config))
    payload = graph.to_json()
    payload["root"] = graph.root.to_json()
    payload["levels"] = {
        str(u): [graph.label_str(s) for s in states]
        for u, states in graph.levels().items()}
    payload["render"] = graph.render().splitlines()
    if config.options.get("table"):
        payload["table1"] = [list(r) for r in graph.mother_daughter_rows()]
        payload["table2"] = [list(r) for r in graph.transition_rows()]
    return payload, EXIT_OK


def _spectrum_payload(config):
    sector = core.CSMSector(
        root=_state(config), coupling=config.coupling,
        full_sector=bool(config.options.get("full_sector")))
    pairs, degenerate = [], []
    for state in sector.basis_:
        try:
            pairs.append(sector.eigenvector(state).to_json())
        except vlds.DegenerateDiagonal as err:
            logger.warning("Degenerate diagonal: %s", err)
            degenerate.append({
                "error": type(err).__name__,
                "pair": [s.to_json() for s in err.pair],
                "roots": [str(r) for r in err.roots],
                "message": str(err)})
    return {
        "coupling": str(config.coupling),
        "approximate": config.coupling.approximate,
        "energies": [
            {"state": s.to_json(),
             "energy": scalars.scalar_to_string(e)}
            for s, e in sector.eigenvalues()],
        "eigenpairs": pairs,
        "degenerate": degenerate}


def cmd_spectrum(config):
    """Energies and eigenvectors of the family (or sector) of a state."""
    key = [config.values, str(config.coupling),
           bool(config.options.get("full_sector"))]
    store = config.cache
    if store is None:
        payload = _spectrum_payload(config)
    else:
        payload = store.fetch("spectrum", key,
                              lambda: _spectrum_payload(config))
    code = EXIT_DEGENERATE if payload["degenerate"] else EXIT_OK
    return payload, code


def _symbolic_jack(label, store):
    """``J_label`` with symbolic coefficients, cached by label."""
    def compute():
        jack = symfunc.jack_gram_schmidt(label, scalars.Coupling.symbolic())
        return {"coeffs": [
            [k.to_json(), scalars.scalar_to_json(v)]
            for k, v in jack.coeffs.items()]}

    key = [label.to_json(), "J"]
    data = compute() if store is None else store.fetch("jack", key, compute)
    return symfunc.JackPoly(
        label=label, coupling=scalars.Coupling.symbolic(),
        coeffs={tuple(k): scalars.scalar_from_json(v)
                for k, v in data["coeffs"]})


def _jack_payload(config, label):
    config.coupling.inverse()
    jack = _symbolic_jack(label, config.cache)
    if not config.coupling.is_symbolic:
        jack = symfunc.JackPoly(
            label=label, coupling=config.coupling,
            coeffs=jack.at(config.coupling.value).coeffs)
    norm = symfunc.jack_norm(label, config.coupling)
    hook = parts.hook_products(label, config.coupling).norm \
        if not label.is_empty else config.coupling.one()
    payload = jack.to_json()
    payload["norm"] = scalars.scalar_to_string(norm)
    payload["hook_norm"] = scalars.scalar_to_string(hook)
    payload["match"] = norm == hook
    if config.n_particles is not None:
        eig = symfunc.jack_from_eigenvector(
            label, config.coupling, config.n_particles)
        restricted = {
            k: v for k, v in jack.coeffs.items()
            if k.length <= config.n_particles}
        payload["eigenvector_match"] = eig.coeffs == restricted
    return payload


def cmd_jack(config):
    """Jack polynomial of a label with its norm checks."""
    label = parts.make_partition(config.values)
    payload = _jack_payload(config, label)
    ok = payload["match"] and payload.get("eigenvector_match", True)
    return payload, EXIT_OK if ok else EXIT_VERIFICATION


def cmd_verify(config):
    """Full Jack verification suite at one weight."""
    weight = config.options["weight"]
    torus = config.options.get("torus")
    if torus is not None:
        vlds.validate_positive_integer_coupling(_require_fixed(config))
    checks = symfunc.verify_weight(weight, config.coupling, torus)
    failed = [c.to_json() for c in checks if not c.passed]
    payload = {
        "weight": weight,
        "coupling": str(config.coupling),
        "torus_n": torus,
        "checks": len(checks),
        "passed": not failed,
        "failed": failed}
    return payload, EXIT_OK if not failed else EXIT_VERIFICATION


def cmd_pseudomomenta(config):
    """Pseudo-momenta of a state, optionally with the sector offsets."""
    value = _require_fixed(config)
    state = _state(config)
    pm = spectrum.pseudo_momenta(
        state, value, config.options.get("length", 1.))
    payload = pm.to_json()
    payload["approximate"] = config.coupling.approximate
    if config.options.get("offsets"):
        basis = sts.enumerate_sector(state.n_particles, state.total)
        payload["offsets"] = spectrum.compare_pseudomomentum_energy(
            basis, value).to_json()
    return payload, EXIT_OK


def cmd_prefactor(config):
    """Gauge prefactor at given positions (floating point)."""
    lam = config.options.get("lam_value")
    if lam is None:
        raise UsageError("prefactor needs --lambda")
    branch = scalars.Branch(config.options["branch_value"])
    x = config.options["positions"]
    length = config.options.get("length", 1.)
    value = spectrum.gauge_prefactor_eval(x, lam, branch, length)
    a, beta = scalars.coupling_from_lambda(lam, branch)
    return {
        "positions": list(x),
        "lambda": lam,
        "branch": branch.value,
        "A": a,
        "beta": beta,
        "value": [value.real, value.imag],
        "modulus": spectrum.prefactor_modulus(x, lam, branch, length),
        "approximate": True}, EXIT_OK


def cmd_young(config):
    """Young diagram, conjugate and the conjugation identity."""
    k = parts.make_partition(config.values)
    conj = k.conjugate()
    lhs, rhs = parts.conjugation_identity(k)
    return {
        "partition": k.to_json(),
        "conjugate": conj.to_json(),
        "diagram": parts.young_diagram(k).splitlines(),
        "conjugate_diagram": parts.young_diagram(conj).splitlines(),
        "identity": {"lhs": lhs, "rhs": rhs, "holds": lhs == rhs}}, EXIT_OK


COMMANDS = {
    "family": cmd_family,
    "spectrum": cmd_spectrum,
    "jack": cmd_jack,
    "verify": cmd_verify,
    "pseudomomenta": cmd_pseudomomenta,
    "prefactor": cmd_prefactor,
    "young": cmd_young}


# =============================================================================
# OUTPUT
# =============================================================================

def to_text(payload, indent=0):
    """Indented text rendering of a payload."""
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, (dict, list)) and value:
                lines.append("{}{}:".format(pad, key))
                lines.append(to_text(value, indent + 1))
            else:
                lines.append("{}{}: {}".format(pad, key, value))
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, (dict, list)):
                lines.append("{}-".format(pad))
                lines.append(to_text(item, indent + 1))
            else:
                lines.append("{}{}".format(pad, item))
    else:
        lines.append("{}{}".format(pad, payload))
    return "\n".join(line for line in lines if line != "")


def render(payload, output):
    """The payload as JSON or as text."""
    if output == "text":
        return to_text(payload)
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


# =============================================================================
# PARSER
# =============================================================================

def _common():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--coupling", default=None,
        help="rational A like 1/2, 'symbolic', or one of {}".format(
            ", ".join(NAMED_COUPLINGS)))
    common.add_argument(
        "--lambda", dest="lam", type=float, default=None,
        help="interaction strength; A is approximated from it")
    common.add_argument(
        "--branch", default="plus", choices=[b.value for b in scalars.Branch],
        help="sign of the square root in A(lambda)")
    common.add_argument("--n-particles", type=int, default=None)
    common.add_argument("--output", default="json", choices=OUTPUTS)
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--log-level", default="WARNING")
    return common


def build_parser():
    """The argparse parser of the ``csmpy`` command."""
    common = _common()
    parser = _Parser(
        prog="csmpy",
        description="Exact spectra of the anti-periodic Calogero-Sutherland "
                    "model.")
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + __version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("family", parents=[common], help="squeeze graph")
    p.add_argument("values", type=parse_values)
    p.add_argument("--table", action="store_true")

    p = sub.add_parser("spectrum", parents=[common], help="eigenpairs")
    p.add_argument("values", type=parse_values)
    p.add_argument("--full-sector", action="store_true")

    p = sub.add_parser("jack", parents=[common], help="Jack polynomial")
    p.add_argument("values", type=parse_values)

    p = sub.add_parser("verify", parents=[common], help="Jack checks")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--torus", type=parse_torus, default=None)

    p = sub.add_parser(
        "pseudomomenta", parents=[common], help="pseudo-momenta")
    p.add_argument("values", type=parse_values)
    p.add_argument("--length", type=float, default=1.)
    p.add_argument("--offsets", action="store_true")

    p = sub.add_parser("prefactor", parents=[common], help="gauge prefactor")
    p.add_argument("--positions", type=parse_floats, required=True)
    p.add_argument("--length", type=float, default=1.)

    p = sub.add_parser("young", parents=[common], help="Young diagram")
    p.add_argument("values", type=parse_values)
    return parser


# =============================================================================
# MAIN
# =============================================================================

def _error_payload(err, **extra):
    payload = {"error": type(err).__name__, "message": str(err)}
    payload.update(extra)
    return payload


def run(argv=None):
    """Parse ``argv`` and run the command.

    Returns
    -------
    payload: dict
    code: int
    output: str

    """
    output = "json"
    try:
        args = build_parser().parse_args(argv)
        output = args.output
        logging.basicConfig(
            level=args.log_level.upper(), stream=sys.stderr,
            format="%(asctime)s %(name)s %(levelname)s %(message)s")
        if args.command == "prefactor":
            # the lambda is used directly, not through an exact coupling
            args.lam_value, args.branch_value = args.lam, args.branch
            args.lam = None
        config = RunConfig.from_args(args)
        logger.info("Running %s with A=%s", config.command, config.coupling)
        payload, code = COMMANDS[config.command](config)
    except UsageError as err:
        payload, code = _error_payload(err), EXIT_USAGE
    except vlds.DegenerateDiagonal as err:
        payload = _error_payload(
            err, pair=[s.to_json() for s in err.pair],
            roots=[str(r) for r in err.roots])
        code = EXIT_DEGENERATE
    except (vlds.CSMError, TypeError, ValueError) as err:
        payload, code = _error_payload(err), EXIT_USAGE
    return payload, code, output


def main(argv=None):
    """Console entry point."""
    payload, code, output = run(argv)
    stream = sys.stdout if code in (EXIT_OK, EXIT_VERIFICATION) \
        else sys.stderr
    print(render(payload, output), file=stream)
    return code
