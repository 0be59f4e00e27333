"""Command-line front end.

Input files are JSON monodromy data::

    {"n": 2, "base_genus": 0,
     "generators": [[-1, 2], [2, 1], ...],
     "handles": [[[...], [...]], ...]}

Each generator is a signed permutation given by the images of ``1..n``; the
optional handles list pairs of signed permutations, one pair per unit of
base genus. Exit codes: 0 success/pass, 1 verdict failure, 2 usage or input
error. JSON output is canonical (sorted keys, no spaces), so identical seeds
and arguments reproduce byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import corr, cover, lattice, prym, surface, weyl
from .cover import MonodromyDatum
from .errors import PrymlabError
from .weyl import OrbitKind, SignedPerm

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

ORBIT_CHOICES = [k.value for k in OrbitKind]


def _emit(payload, fmt: str):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        _emit_text(payload)


def _emit_text(payload, indent=0):
    pad = "  " * indent
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                print(f"{pad}{k}:")
                _emit_text(v, indent + 1)
            else:
                print(f"{pad}{k}: {_flat(v)}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                _emit_text(v, indent)
                print()
            else:
                print(f"{pad}{_flat(v)}")
    else:
        print(f"{pad}{_flat(payload)}")


def _is_flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


def _flat(v):
    if isinstance(v, list):
        return "(" + ", ".join(str(x) for x in v) + ")"
    return str(v)


def load_datum(path: str) -> MonodromyDatum:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}")
    try:
        n = int(raw["n"])
        base_genus = int(raw.get("base_genus", 0))
        gens = tuple(SignedPerm(n, tuple(int(v) for v in g)) for g in raw["generators"])
        handles = tuple(
            (SignedPerm(n, tuple(int(v) for v in a)), SignedPerm(n, tuple(int(v) for v in b)))
            for a, b in raw.get("handles", [])
        )
        return MonodromyDatum(n, base_genus, gens, handles)
    except KeyError as exc:
        raise UsageError(f"{path}: missing field {exc}")
    except (TypeError, ValueError, PrymlabError) as exc:
        raise UsageError(f"{path}: {exc}")


class UsageError(Exception):
    pass


def cmd_validate(args) -> int:
    datum = load_datum(args.file)
    report = cover.validate(datum)
    if report is None:
        _emit({"valid": True}, args.format)
        return EXIT_OK
    _emit(
        {
            "valid": False,
            "reason": report.message,
            "offending_product": report.offending_product.to_list(),
        },
        args.format,
    )
    return EXIT_USAGE


def cmd_classify(args) -> int:
    datum = load_datum(args.file)
    cover.require_valid(datum)
    cls = weyl.classify_subgroup(list(datum.gens) + [w for pair in datum.handles for w in pair])
    _emit({"class": cls.value}, args.format)
    return EXIT_OK


def cmd_genera(args) -> int:
    datum = load_datum(args.file)
    cover.require_valid(datum)
    out = {}
    for kind in OrbitKind:
        cm = cover.induce(datum, kind)
        comps = cover.components(cm)
        if len(comps) == 1:
            out[kind.value] = {"degree": cm.degree, "genus": cover.genus(cm)}
        else:
            parts = [
                {"sheets": len(c), "genus": cover.genus(cover.component_cover(cm, c))}
                for c in comps
            ]
            out[kind.value] = {"degree": cm.degree, "components": parts}
    _emit(out, args.format)
    return EXIT_OK


def cmd_predict(args) -> int:
    try:
        pred = cover.predict(args.n, args.ds, args.dl, args.gy)
    except ValueError as exc:
        raise UsageError(str(exc))
    payload = {
        "genera": pred.genera,
        "dims": pred.dims,
        "types": {k: list(v) for k, v in pred.types.items()},
        "out_of_regime": list(pred.out_of_regime),
        "notes": list(pred.notes),
    }
    _emit(payload, args.format)
    return EXIT_OK


def cmd_homology(args) -> int:
    datum = load_datum(args.file)
    cover.require_valid(datum)
    cm = cover.induce(datum, OrbitKind(args.orbit))
    H = surface.build_all(cm)
    payload = {
        "orbit": args.orbit,
        "degree": cm.degree,
        "components": len(H.parts),
        "rank": H.rank,
    }
    if args.dump:
        payload["gram"] = lattice.to_lists(H.gram)
    _emit(payload, args.format)
    return EXIT_OK


def cmd_ptype(args) -> int:
    datum = load_datum(args.file)
    cover.require_valid(datum)
    kind = OrbitKind(args.orbit)
    cm = cover.induce(datum, kind)
    if kind is OrbitKind.SPINOR:
        lat, cert = prym.prym_tyurin_lattice(cm)
        which = "P(X,delta)"
    elif kind is OrbitKind.VECTOR:
        lat = prym.prym_lattice(cm, corr.negation_matrix(datum.n))
        which = "P(C,C')"
    elif kind is OrbitKind.PARITY:
        lat = prym.prym_lattice(cm, lattice.intmat([[0, 1], [1, 0]]))
        which = "P(Ytilde,Y)"
    else:
        H = surface.build_all(cm)
        lat = lattice.PolarizedLattice(H.gram, lattice.eye(H.rank))
        which = "full Jacobian lattice"
    payload = {"orbit": args.orbit, "lattice": which, "type": list(lattice.ptype(lat))}
    if args.dump:
        payload["gram"] = lattice.to_lists(lat.restricted_gram())
    _emit(payload, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    if (args.scenario is None) == (args.identity is None):
        raise UsageError("choose exactly one of --scenario or --identity")
    if args.scenario is not None:
        if args.scenario == "list":
            _emit({"scenarios": prym.scenario_names()}, args.format)
            return EXIT_OK
        datum = load_datum(args.file) if args.file else None
        counts = None
        if args.ds is not None or args.dl is not None:
            if args.ds is None or args.dl is None:
                raise UsageError("--ds and --dl go together")
            counts = (args.ds, args.dl)
        result = prym.verify_scenario(
            args.scenario, datum=datum, n=args.n, counts=counts, seed=args.seed
        )
        _emit(result.as_dict(), args.format)
        return EXIT_OK if result.verdict else EXIT_FAIL
    if args.identity == "list":
        _emit(
            {
                name: {"ranks": corr.applicable_ranks(name)}
                for name in corr.identity_names()
            },
            args.format,
        )
        return EXIT_OK
    if args.n is None:
        raise UsageError("--identity needs --n")
    datum = load_datum(args.file) if args.file else None
    try:
        result = corr.check_identity(args.identity, args.n, level=args.level, datum=datum)
    except KeyError as exc:
        raise UsageError(str(exc))
    payload = {
        "identity": result.name,
        "letter": result.letter,
        "n": result.n,
        "level": result.level,
        "passed": result.passed,
        "details": {str(k): v for k, v in result.details.items()},
    }
    if not result.passed:
        payload["witness"] = result.witness
    _emit(payload, args.format)
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_probe(args) -> int:
    workers = int(os.environ.get("PRYMLAB_THREADS", "1"))
    trials = args.trials
    seeds = [args.seed + t for t in range(trials)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(prym.probe_trial, args.n, args.ds, args.dl, s) for s in seeds
            ]
            rows = []
            for t, fut in enumerate(futures):  # stream in trial order
                row = fut.result()
                row["trial"] = t
                print(json.dumps(row, sort_keys=True, separators=(",", ":")))
                rows.append(row)
    else:
        rows = []
        for t, s in enumerate(seeds):
            row = prym.probe_trial(args.n, args.ds, args.dl, s)
            row["trial"] = t
            print(json.dumps(row, sort_keys=True, separators=(",", ":")))
            rows.append(row)
    agree = sum(1 for r in rows if r["agree"])
    asserted = args.ds == 0
    if asserted and agree != trials:
        print(
            json.dumps(
                {"error": "mismatch in the proven unramified regime"},
                sort_keys=True,
                separators=(",", ":"),
            )
        )
        return EXIT_FAIL
    summary = {
        "agreement": f"{agree}/{trials}",
        "asserted": asserted,
        "note": "agreement reported, not asserted"
        if not asserted
        else "unramified regime: agreement asserted",
    }
    print(json.dumps(summary, sort_keys=True, separators=(",", ":")))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand from clobbering a value parsed up front
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    ap = argparse.ArgumentParser(
        prog="prymlab",
        parents=[common],
        description="exact Prym / Prym-Tyurin lattice verification for covers "
        "of the line built from signed-permutation monodromy",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common],
                       help="check the surface-group product relation")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("classify", parents=[common], help="identify the monodromy group")
    p.add_argument("file")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("genera", parents=[common],
                       help="genera of all induced orbit covers")
    p.add_argument("file")
    p.set_defaults(fn=cmd_genera)

    p = sub.add_parser("predict", parents=[common],
                       help="closed-form genera, dimensions and types")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ds", type=int, required=True)
    p.add_argument("--dl", type=int, required=True)
    p.add_argument("--gy", type=int, default=0)
    p.set_defaults(fn=cmd_predict)

    p = sub.add_parser("homology", parents=[common],
                       help="homology rank (and Gram with --dump)")
    p.add_argument("file")
    p.add_argument("--orbit", choices=ORBIT_CHOICES, required=True)
    p.add_argument("--dump", action="store_true")
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser(
        "ptype",
        parents=[common],
        help="polarization type of the lattice attached to an orbit "
        "(vector: ordinary Prym; spinor: Prym-Tyurin; parity: degree-2 Prym; "
        "others: full Jacobian)",
    )
    p.add_argument("file")
    p.add_argument("--orbit", choices=ORBIT_CHOICES, required=True)
    p.add_argument("--dump", action="store_true")
    p.set_defaults(fn=cmd_ptype)

    p = sub.add_parser("verify", parents=[common],
                       help="run a named scenario or identity check")
    p.add_argument("--scenario")
    p.add_argument("--identity")
    p.add_argument("--file")
    p.add_argument("--n", type=int)
    p.add_argument("--ds", type=int)
    p.add_argument("--dl", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--level", choices=["fiber", "homology"], default="fiber")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("probe", parents=[common],
                       help="conjecture probe: one JSON line per trial")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--ds", type=int, required=True)
    p.add_argument("--dl", type=int, required=True)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_probe)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if not hasattr(args, "format"):
        args.format = "text"
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PrymlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
