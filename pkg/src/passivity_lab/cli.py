"""Command-line front end.

JSON reports go to stdout (``fridge sweep`` writes CSV). Exit status is 0
when a predicate holds or a build succeeds, 1 when a predicate fails and 2
for malformed input or usage errors.

Vectors and matrices are given inline as JSON, with exact fractions such as
``1/3`` allowed, or as ``@path`` to read a JSON file.
"""

from __future__ import annotations

import argparse
import io
import sys
from typing import Callable, Sequence

import numpy as np

from . import channels as ch
from . import majorization as mj
from . import refrigeration as fr
from . import states as st
from .serialization import (
    InputError,
    channel_from_json,
    channel_to_json,
    decomposition_to_json,
    dumps,
    load_input,
    matrix_from_json,
    povm_from_json,
    pure_state_from_json,
    report,
    to_float_array,
)

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE = 0, 1, 2
DEFAULT_SEED = 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _vec(args, name: str, key: str = "populations") -> np.ndarray:
    value = getattr(args, name)
    if value is None:
        raise InputError(f"--{name.replace('_', '-')} is required")
    return to_float_array(load_input(value, f"--{name}"), f"--{name}", key)


def _energies(args, d: int | None = None) -> np.ndarray:
    if args.energies is None:
        if d is None:
            raise InputError("--energies is required")
        return np.arange(d, dtype=float)
    e = to_float_array(load_input(args.energies, "--energies"), "--energies", "energies")
    if d is not None and e.size != d:
        raise InputError(f"--energies: expected {d} levels, got {e.size}")
    return e


def _state(args, name: str = "rho") -> np.ndarray:
    return matrix_from_json(load_input(getattr(args, name), f"--{name}"), f"--{name}")


def _channel(args) -> ch.KrausChannel:
    return channel_from_json(load_input(args.channel, "--channel"))


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise InputError(f"cannot parse complex number {text!r}") from None


def _certs(channel: ch.KrausChannel, tol: float, p=None, q=None) -> dict:
    out = {
        "trace_preserving": ch.is_trace_preserving(channel, tol),
        "incoherent": ch.is_incoherent(channel, tol),
        "strictly_incoherent": ch.is_strictly_incoherent(channel, tol),
    }
    if channel.in_dim == channel.out_dim:
        out["ppo"] = ch.is_ppo(channel, tol)
    if p is not None:
        out["rppo"] = ch.is_rppo(channel, p, q, tol)
    return out


# check ---------------------------------------------------------------------

def cmd_check_passive(args):
    rho = _state(args)
    ok = st.is_passive(rho, tol=args.tol)
    return ok, report("check passive", verdict=ok)


def cmd_check_vc(args):
    r, p = _vec(args, "r"), _vec(args, "p")
    ok = st.is_virtually_cooler(r, p, args.tol)
    fields = {"verdict": ok}
    if np.all(p > 0):
        fields["witness"] = np.real(np.diag(st.relative_passivity_witness(r, p, args.tol)))
    return ok, report("check vc", **fields)


def cmd_check_hoffman(args):
    if args.matrix is not None:
        R = np.real(matrix_from_json(load_input(args.matrix, "--matrix"), "--matrix"))
        ok = mj.is_hoffman_matrix(R, args.tol)
        return ok, report("check hoffman", verdict=ok)
    p, q = _vec(args, "p"), _vec(args, "q")
    ok = mj.hoffman_majorizes(q, p, args.tol)
    fields = {"verdict": ok}
    if ok:
        fields["matrix"] = mj.find_hoffman_matrix(p, q, args.tol)
    return ok, report("check hoffman", **fields)


def cmd_check_asym(args):
    if args.matrix is not None:
        D = np.real(matrix_from_json(load_input(args.matrix, "--matrix"), "--matrix"))
        ok = mj.is_asymmetric_hoffman_matrix(D, args.tol)
        return ok, report("check asym-hoffman", verdict=ok)
    p, q = _vec(args, "p"), _vec(args, "q")
    D = mj.asymmetric_hoffman_majorizes(q, p, args.tol)
    return D is not None, report("check asym-hoffman", verdict=D is not None, matrix=D)


# decompose -----------------------------------------------------------------

def cmd_decompose_hoffman(args):
    if args.matrix is not None:
        R = np.real(matrix_from_json(load_input(args.matrix, "--matrix"), "--matrix"))
        dec = mj.decompose_hoffman(R, args.tol)
        err = float(np.max(np.abs(dec.matrix() - R)))
    else:
        p, q = _vec(args, "p"), _vec(args, "q")
        dec = mj.hoffman_weights(p, q, args.tol)
        err = float(np.max(np.abs(dec.matrix() @ q - p)))
    return True, report("decompose hoffman", decomposition=decomposition_to_json(dec), error=err)


# build ---------------------------------------------------------------------

def cmd_build_rppo(args):
    p, q = _vec(args, "p"), _vec(args, "q")
    if args.phases_in or args.phases_out:
        psi = pure_state_from_json({"probs": p.tolist(), "phases": _vec(args, "phases_in").tolist()
                                    if args.phases_in else None})
        phi = pure_state_from_json({"probs": q.tolist(), "phases": _vec(args, "phases_out").tolist()
                                    if args.phases_out else None})
        channel = ch.transform_pure_state(psi, phi, args.tol)
    else:
        channel = ch.build_rppo_pure(p, q, args.tol)
    certs = _certs(channel, args.tol, p, q)
    return True, report("build rppo", channel=channel_to_json(channel), certificates=certs)


def cmd_build_qubit_ppo(args):
    if args.a is not None:
        a = _vec(args, "a")
        b_raw = load_input(args.b, "--b") if args.b else None
        if b_raw is None:
            raise InputError("--b is required with --a")
        b = np.array([_complex(x) if isinstance(x, str) else complex(x) for x in b_raw])
        channel = ch.qubit_ppo_canonical(a, b, args.tol)
        certs = _certs(channel, args.tol)
    else:
        p, q = _vec(args, "p"), _vec(args, "q")
        channel = ch.build_qubit_ppo_pure(p, q, args.tol)
        certs = _certs(channel, args.tol)
    return True, report("build qubit-ppo", channel=channel_to_json(channel), certificates=certs)


def cmd_build_abo(args):
    povm = povm_from_json(load_input(args.povm, "--povm"))
    channel = ch.build_abo(povm, args.tol)
    return True, report("build abo", channel=channel_to_json(channel), certificates=_certs(channel, args.tol))


def cmd_build_athermal(args):
    e = _energies(args)
    channel = ch.build_athermal(e, args.beta)
    return True, report("build athermal", channel=channel_to_json(channel),
                        gibbs=st.thermal_populations(e, args.beta), certificates=_certs(channel, args.tol))


def cmd_build_stinespring(args):
    channel = ch.qubit_stinespring_ppo(_complex(args.alpha), args.q_env)
    return True, report("build stinespring", channel=channel_to_json(channel), certificates=_certs(channel, args.tol))


# certify -------------------------------------------------------------------

def _certify(args, kind: str):
    channel = _channel(args)
    tol = args.tol
    if kind == "ppo":
        cert = ch.certify_ppo(channel, tol, args.samples, np.random.default_rng(args.seed))
    elif kind == "rppo":
        p, q = _vec(args, "p"), _vec(args, "q")
        cert = ch.certify_rppo(channel, p, q, tol, args.samples, np.random.default_rng(args.seed))
    elif kind == "abo":
        cert = ch.certify_abo(channel, tol)
    elif kind == "incoherent":
        cert = ch.Certificate("incoherent", ch.is_incoherent(channel, tol), checked=channel.in_dim)
    else:
        cert = ch.Certificate("strictly_incoherent", ch.is_strictly_incoherent(channel, tol), checked=len(channel))
    return cert.verdict, report(f"certify {kind}", **cert.to_dict())


# scalar quantities ---------------------------------------------------------

def cmd_ergotropy(args):
    rho = _state(args)
    e = _energies(args, rho.shape[0])
    W = st.ergotropy(rho, e)
    return True, report("ergotropy", ergotropy=W, energy=st.energy(rho, e))


def cmd_monotone(args):
    psi = pure_state_from_json(load_input(args.psi, "--psi"), "--psi")
    e = _energies(args, psi.dim)
    fn = st.monotone_A if args.kind == "A" else st.monotone_B
    values = {str(a): fn(psi, e, a) for a in args.alpha}
    return True, report("monotone", kind=args.kind, values=values)


# refrigeration -------------------------------------------------------------

def cmd_fridge_sweep(args):
    dims = [int(x) for x in args.dims.split(",")]
    if any(d < 2 or d > mj.DEFAULT_MAX_DIM for d in dims):
        raise InputError(f"--dims: each dimension must lie in [2, {mj.DEFAULT_MAX_DIM}]")
    rows = list(fr.sweep(dims, args.pairs, args.seed, args.tol))
    ok = all(r["B_fin_r"] >= r["B_fin_p"] - args.tol and r["F_r"] <= r["F_p"] + args.tol for r in rows)
    if args.format == "csv":
        buf = io.StringIO()
        fr.write_sweep_csv(rows, buf)
        return ok, buf.getvalue()
    return ok, report("fridge sweep", ordered=ok, rows=rows)


# fixtures ------------------------------------------------------------------

def cmd_fixture_example(args):
    q = _vec(args, "q")
    if q.size != 3:
        raise InputError("--q: expected three populations")
    p = np.array([(q[0] + q[1]) / 2, (q[0] + q[1]) / 2, q[2]])
    channel = ch.qutrit_example_channel(p, q)
    built = ch.build_rppo_pure(p, q, args.tol)
    certs = _certs(channel, args.tol, p, q)
    certs["matches_construction"] = ch.channels_equal(channel, built, 1e-10)
    return all(certs[k] for k in ("trace_preserving", "strictly_incoherent", "rppo")), report(
        "fixtures qutrit-example", p=p, q=q, channel=channel_to_json(channel), certificates=certs)


def cmd_fixture_counterexample(args):
    q = _vec(args, "q")
    channel, out = ch.qutrit_stinespring_counterexample(q)
    cert = ch.certify_ppo(channel, args.tol)
    return True, report("fixtures qutrit-counterexample", witness_input=[1.0, 0.0, 0.0],
                        witness_output=np.real(np.diag(out)), output_passive=st.is_passive(out, tol=args.tol),
                        ppo=cert.to_dict())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=mj.DEFAULT_TOL, help="numerical tolerance")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized cross-checks")
    common.add_argument("--format", choices=("json", "csv"), default=None, help="output format")

    parser = _Parser(prog="passivity-lab", description=__doc__.split("\n\n")[0])
    top = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def leaf(sub, name, func: Callable, **kw):
        sp = sub.add_parser(name, parents=[common], **kw)
        sp.set_defaults(func=func)
        return sp

    def group(name, help_):
        g = top.add_parser(name, help=help_)
        return g.add_subparsers(dest="sub", required=True, parser_class=_Parser)

    check = group("check", "order and passivity predicates")
    sp = leaf(check, "passive", cmd_check_passive)
    sp.add_argument("--rho", required=True)
    sp = leaf(check, "vc", cmd_check_vc)
    sp.add_argument("--r", required=True)
    sp.add_argument("--p", required=True)
    for name, func in (("hoffman", cmd_check_hoffman), ("asym-hoffman", cmd_check_asym)):
        sp = leaf(check, name, func)
        sp.add_argument("--matrix")
        sp.add_argument("--p")
        sp.add_argument("--q")

    dec = group("decompose", "convex decompositions")
    sp = leaf(dec, "hoffman", cmd_decompose_hoffman)
    sp.add_argument("--matrix")
    sp.add_argument("--p")
    sp.add_argument("--q")

    build = group("build", "channel constructions")
    sp = leaf(build, "rppo", cmd_build_rppo)
    sp.add_argument("--p", required=True)
    sp.add_argument("--q", required=True)
    sp.add_argument("--phases-in", dest="phases_in")
    sp.add_argument("--phases-out", dest="phases_out")
    sp = leaf(build, "qubit-ppo", cmd_build_qubit_ppo)
    sp.add_argument("--p")
    sp.add_argument("--q")
    sp.add_argument("--a", help="five real canonical parameters")
    sp.add_argument("--b", help="four complex canonical parameters, e.g. [\"0.6+0.1j\", 0, 0, 0.8]")
    sp = leaf(build, "abo", cmd_build_abo)
    sp.add_argument("--povm", required=True)
    sp = leaf(build, "athermal", cmd_build_athermal)
    sp.add_argument("--energies", required=True)
    sp.add_argument("--beta", type=float, required=True)
    sp = leaf(build, "stinespring", cmd_build_stinespring)
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--q-env", dest="q_env", type=float, required=True)

    cert = group("certify", "channel property certificates")
    for kind in ("ppo", "rppo", "abo", "incoherent", "strict"):
        sp = leaf(cert, kind, lambda a, k=kind: _certify(a, k))
        sp.add_argument("--channel", required=True)
        sp.add_argument("--samples", type=int, default=100, help="random inputs for cross-validation")
        if kind == "rppo":
            sp.add_argument("--p", required=True)
            sp.add_argument("--q", required=True)

    sp = top.add_parser("ergotropy", parents=[common], help="maximal unitarily extractable work")
    sp.set_defaults(func=cmd_ergotropy)
    sp.add_argument("--rho", required=True)
    sp.add_argument("--energies")

    sp = top.add_parser("monotone", parents=[common], help="A or B monotone of a pure state")
    sp.set_defaults(func=cmd_monotone)
    sp.add_argument("--psi", required=True, help="probabilities or {probs, phases}")
    sp.add_argument("--energies")
    sp.add_argument("--kind", choices=("A", "B"), default="B")
    sp.add_argument("--alpha", type=float, nargs="+", default=[1.0])

    fridge = group("fridge", "virtual-qubit refrigeration")
    sp = leaf(fridge, "sweep", cmd_fridge_sweep)
    sp.add_argument("--dims", default="2,3,4,5,6")
    sp.add_argument("--pairs", type=int, default=100)

    fix = group("fixtures", "worked examples")
    sp = leaf(fix, "qutrit-example", cmd_fixture_example)
    sp.add_argument("--q", required=True)
    sp = leaf(fix, "qutrit-counterexample", cmd_fixture_counterexample)
    sp.add_argument("--q", required=True)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    """Execute one command and return its exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        ok, out = args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    if isinstance(out, str):
        stdout.write(out)
    else:
        print(dumps(out), file=stdout)
    return EXIT_TRUE if ok else EXIT_FALSE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
