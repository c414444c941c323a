"""Command-line entry point: ``tropflags <verb> ...``.

Exit codes: 0 ok, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from . import canonical as cs
from . import suites
from .cartan import CartanDatum, CartanError, from_json, inverse_cartan, named_type, weyl_dim
from .phi import phi
from .points import parse_point, transport
from .semifield import get as get_semifield

SCHEMA = "tropical-flags/1"


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    datum: CartanDatum
    semifield: str
    seed: int
    fmt: str


def _datum(args) -> CartanDatum:
    if getattr(args, "matrix", None):
        return from_json(args.matrix)
    return named_type(args.type)


def _config(args) -> RunConfig:
    return RunConfig(_datum(args), getattr(args, "semifield", "trop"), args.seed, args.format)


def _weights(datum: CartanDatum, text: str | None) -> tuple[int, ...]:
    if text is None:
        raise UsageError("--p (or --lambda) is required")
    try:
        p = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse weight {text!r}") from None
    if len(p) != datum.n:
        raise UsageError(f"weight needs {datum.n} entries in label order {list(datum.labels)}")
    return p


def _emit(cfg: RunConfig, payload: dict, lines: list[str]) -> None:
    if cfg.fmt == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _fmt_matrix(rows) -> list[str]:
    return ["  " + " ".join(f"{str(x):>5}" for x in row) for row in rows]


def cmd_describe(cfg: RunConfig) -> int:
    d = cfg.datum
    b = inverse_cartan(d)
    bang = {d.labels[i]: d.labels[d.bang(i)] for i in range(d.n)}
    payload = {
        "verb": "describe",
        "labels": list(d.labels),
        "cartan_matrix": [list(r) for r in d.a],
        "nu": d.nu,
        "bang": bang,
        "reduced_words": len(d.reduced_words),
        "canonical_word": d.word_labels(d.canonical_word),
        "inverse_cartan": [[str(x) for x in row] for row in b],
    }
    lines = [f"type: {d.name or 'custom'}", f"labels: {' '.join(d.labels)}", "cartan matrix:"]
    lines += _fmt_matrix(d.a)
    lines += [f"nu = {d.nu}",
              "bang: " + ", ".join(f"{k}->{v}" for k, v in bang.items()),
              f"|reduced words of w0| = {len(d.reduced_words)}",
              f"canonical word: {' '.join(d.word_labels(d.canonical_word))}",
              "inverse cartan:"]
    lines += _fmt_matrix(b)
    _emit(cfg, payload, lines)
    return 0


ALL_FORMS_LIMIT = 16


def cmd_phi(cfg: RunConfig, tokens: Sequence[str]) -> int:
    d = cfg.datum
    K = get_semifield(cfg.semifield)
    try:
        A = parse_point(d, K, tokens)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from None
    image = phi(A)
    forms = {}
    if len(d.reduced_words) <= ALL_FORMS_LIMIT:
        forms = {" ".join(d.word_labels(w)): str(transport(image, w)) for w in d.reduced_words}
    payload = {
        "verb": "phi",
        "semifield": K.name,
        "input": A.to_json(),
        "reversed": image.to_json(),
        "canonical": image.canonical.to_json(),
        "forms": forms,
    }
    lines = [f"reversed:  {image}", f"canonical: {image.canonical}"]
    for w, text in forms.items():
        if text not in (str(image), str(image.canonical)):
            lines.append(f"on {w}: {text}")
    _emit(cfg, payload, lines)
    return 0


def cmd_enumerate(cfg: RunConfig, p: tuple[int, ...], method: str) -> int:
    d = cfg.datum
    if any(x < 0 for x in p):
        raise UsageError("p must be dominant (all entries >= 0)")
    members = cs.enumerate_crystal(d, p) if method == "crystal" else cs.enumerate_bounded(d, p)
    dim = weyl_dim(d, p)
    payload = {
        "verb": "enumerate",
        "p": list(p),
        "method": method,
        "size": len(members),
        "weyl_dim": dim,
        "members": [A.to_json() for A in members],
    }
    lines = [f"U_N,p for p = {list(p)} ({method}): {len(members)} points; Weyl dimension {dim}"]
    lines += [f"  {A}" for A in members]
    _emit(cfg, payload, lines)
    return 0 if len(members) == dim else 1


def cmd_xi(cfg: RunConfig, lam: tuple[int, ...]) -> int:
    d = cfg.datum
    if any(x < 0 for x in lam):
        raise UsageError("lambda must be dominant")
    block = cs.build_Xi(d, [lam])
    size = len(cs.enumerate_crystal(d, lam))
    target = set(cs.build_Xi(d, [d.bang_vector(lam)]))
    checks = {
        "size_is_square": len(block) == size**2,
        "omega_lands_in_Xi": all(cs.omega_tilde(e) in target for e in block),
        "omega_involution": all(cs.omega_tilde(cs.omega_tilde(e)) == e for e in block),
        "sharp_involution": all(cs.sharp_tilde(cs.sharp_tilde(e)) == e for e in block),
        "omega_sharp_commute": all(cs.omega_tilde(cs.sharp_tilde(e)) == cs.sharp_tilde(cs.omega_tilde(e))
                                   for e in block),
        "xi_prime_round_trip": all(cs.xi_prime_to_xi(cs.xi_to_xi_prime(e)) == e for e in block),
    }
    payload = {"verb": "xi", "lambda": list(lam), "size": len(block), "block": size,
               "checks": checks, "entries": [e.to_json() for e in block]}
    lines = [f"Xi block for lambda = {list(lam)}: {len(block)} entries ({size}^2)"]
    lines += [f"  {'ok  ' if v else 'FAIL'} {k}" for k, v in checks.items()]
    _emit(cfg, payload, lines)
    return 0 if all(checks.values()) else 1


def cmd_oracle(cfg: RunConfig, count: int) -> int:
    check = suites.matrix_oracle(seed=cfg.seed, count=count)
    _emit(cfg, {"verb": "oracle", "seed": cfg.seed, "results": [check.to_json()]}, [check.line()])
    return 0 if check.passed else 1


def cmd_verify(cfg: RunConfig, names: list[str], jobs: int = 1) -> int:
    if not names or "all" in names:
        names = list(suites.SUITES)
    unknown = [n for n in names if n not in suites.SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; choose from {list(suites.SUITES)}")
    results = suites.run_all(cfg.seed, names, jobs=jobs)
    _emit(cfg, {"verb": "verify", "seed": cfg.seed, "results": [c.to_json() for c in results]},
          [c.line() for c in results])
    return 0 if all(c.passed for c in results) else 1


def cmd_dim(cfg: RunConfig, p: tuple[int, ...]) -> int:
    if any(x < 0 for x in p):
        raise UsageError("p must be dominant")
    dim = weyl_dim(cfg.datum, p)
    _emit(cfg, {"verb": "dim", "p": list(p), "dim": dim}, [str(dim)])
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--type", default="A2", help="A1, A2, A3, A4 or D4 (default A2)")
    src.add_argument("--matrix", help='JSON file {"labels": [...], "matrix": [[...]]}')
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=["table", "json"], default="table")

    weight = argparse.ArgumentParser(add_help=False)
    weight.add_argument("--p", "--lambda", dest="p", help="comma-separated p_i = (i, lambda) in label order")

    parser = argparse.ArgumentParser(prog="tropflags", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    sub.add_parser("describe", parents=[common], help="Cartan data, nu, bang, reduced words")
    ph = sub.add_parser("phi", parents=[common], help="apply phi to a point like 'i^1 j^2 i^3'")
    ph.add_argument("--semifield", choices=["trop", "rat"], default="trop")
    ph.add_argument("point", nargs="+")
    en = sub.add_parser("enumerate", parents=[common, weight], help="list U_N,p")
    en.add_argument("--method", choices=["crystal", "bounded"], default="crystal")
    sub.add_parser("xi", parents=[common, weight], help="build one Xi block and check its involutions")
    orc = sub.add_parser("oracle", parents=[common], help="randomized type-A matrix verification")
    orc.add_argument("--count", type=int, default=100)
    ver = sub.add_parser("verify", parents=[common], help="run the verification suites")
    ver.add_argument("--suite", action="append", default=[], help="suite name or 'all' (repeatable)")
    ver.add_argument("--jobs", type=int, default=1, help="worker processes (output order is fixed)")
    sub.add_parser("dim", parents=[common, weight], help="Weyl dimension of V(lambda)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        if args.verb == "describe":
            return cmd_describe(cfg)
        if args.verb == "phi":
            return cmd_phi(cfg, args.point)
        if args.verb == "enumerate":
            return cmd_enumerate(cfg, _weights(cfg.datum, args.p), args.method)
        if args.verb == "xi":
            return cmd_xi(cfg, _weights(cfg.datum, args.p))
        if args.verb == "oracle":
            return cmd_oracle(cfg, args.count)
        if args.verb == "verify":
            return cmd_verify(cfg, args.suite, args.jobs)
        if args.verb == "dim":
            return cmd_dim(cfg, _weights(cfg.datum, args.p))
    except (UsageError, CartanError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled verb {args.verb}")


if __name__ == "__main__":
    sys.exit(main())
