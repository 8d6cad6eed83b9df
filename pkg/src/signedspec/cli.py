"""Command-line interface.

Exit codes: 0 ok, 1 refuted (a check came back false or found nothing), 2 error.
With ``--json`` every command prints one object with keys command, status, data.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .core import RootedSignedGraph, SignedGraph, sk8
from .iso import (
    DEFAULT_SWITCH_LIMIT,
    SearchTooLarge,
    are_isomorphic,
    are_switching_isomorphic,
    check_coiso,
    is_sign_symmetric,
    refute_sign_symmetry_by_clique,
)
from .products import (
    Basis,
    neps,
    neps_symmetry_certificate,
    rooted_product,
    rooted_product_char_poly,
    rooted_symmetry_certificate,
)
from .search import (
    DEFAULT_EDGE_LIMIT,
    DEFAULT_GRAPH_LIMIT,
    PREDICATES,
    enumerate_signatures,
    find_cospectrally_rooted_pairs,
    write_graphs,
    write_pair_results,
)
from .sgfile import SgFormatError, read_sg, write_sg
from .spectral import are_cospectral, char_poly, eigenvalues, has_symmetric_spectrum

EXIT_CODES = {"ok": 0, "refuted": 1, "error": 2}


@dataclass
class CommandResult:
    command: str
    status: str
    data: dict = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_json(self) -> dict:
        return {"command": self.command, "status": self.status, "data": self.data}


class CliError(Exception):
    def __init__(self, reason: str, message: str):
        self.reason = reason
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        reason = "unknown_subcommand" if "invalid choice" in message else "bad_arguments"
        raise CliError(reason, message)


def _fmt(x: float) -> float:
    v = float(f"{x:.12g}")
    return 0.0 if v == 0 else v


def _graph_json(g: SignedGraph) -> dict:
    return {"n": g.n, "edges": [[u, v, s] for u, v, s in g.edges()]}


def _load(path: str) -> SignedGraph:
    try:
        return read_sg(path)
    except OSError as exc:
        raise CliError("unreadable_file", f"cannot read {path}: {exc.strerror or exc}") from None
    except SgFormatError as exc:
        raise CliError("malformed_sg", f"{path}: {exc}") from None


def _roots(text: str | None, count: int) -> list[int]:
    if text is None:
        return [0] * count
    try:
        roots = [int(r) for r in text.split(",") if r.strip()]
    except ValueError:
        raise CliError("bad_arguments", f"--root expects comma-separated integers, got {text!r}") from None
    if len(roots) == 1:
        roots = roots * count
    if len(roots) != count:
        raise CliError("bad_arguments", f"--root lists {len(roots)} roots for {count} files")
    return roots


def _rooted(paths: Sequence[str], roots_text: str | None) -> list[RootedSignedGraph]:
    graphs = [_load(p) for p in paths]
    return [RootedSignedGraph(g, r) for g, r in zip(graphs, _roots(roots_text, len(graphs)))]


def _basis(text: str | None) -> Basis:
    if text is None:
        raise CliError("bad_arguments", "--basis is required")
    p = Path(text)
    if p.suffix and p.exists():
        text = p.read_text(encoding="utf-8")
    return Basis.parse(text)


def _write_out(result: CommandResult, g: SignedGraph, out: str | None, comment: str) -> None:
    if out:
        write_sg(out, g, comment=comment)
        result.data["out"] = out
        result.lines.append(f"wrote {out}")


# --- commands ---------------------------------------------------------------


def cmd_spectrum(args) -> CommandResult:
    g = _load(args.file)
    spec = eigenvalues(g)
    values = [_fmt(v) for v in spec.values]
    poly = spec.source_poly
    data = {
        "n": g.n,
        "eigenvalues": values,
        "char_poly": poly.to_list(),
        "symmetric": has_symmetric_spectrum(g),
    }
    lines = [
        f"n = {g.n}",
        "eigenvalues: " + " ".join(f"{v:.12g}" for v in values),
        f"char poly (low to high): {poly.to_list()}",
    ]
    return CommandResult("spectrum", "ok", data, lines)


def cmd_charpoly(args) -> CommandResult:
    g = _load(args.file)
    p = char_poly(g)
    return CommandResult(
        "charpoly", "ok", {"n": g.n, "m": g.m, "char_poly": p.to_list()}, [str(p.to_list())]
    )


def cmd_check(args) -> CommandResult:
    kind = args.check
    name = f"check {kind}"
    if kind == "sym-spectrum":
        g = _load(args.files[0])
        ok = has_symmetric_spectrum(g)
        return CommandResult(
            name,
            "ok" if ok else "refuted",
            {"symmetric": ok, "char_poly": char_poly(g).to_list()},
            [f"symmetric spectrum: {ok}"],
        )
    if kind == "sign-symmetric":
        g = _load(args.files[0])
        if args.clique:
            res = refute_sign_symmetry_by_clique(g, limit=args.limit)
            data = {
                "method": "clique",
                "cliques": [list(c) for c in res.cliques],
                "refuted": res.refuted,
            }
            if res.refuted:
                return CommandResult(name, "refuted", data, ["not sign-symmetric (unique maximum clique argument)"])
            data.update(reason="inconclusive", message="clique restriction does not decide sign-symmetry")
            return CommandResult(name, "error", data, ["inconclusive: clique restriction does not decide"])
        w = is_sign_symmetric(g, limit=args.limit)
        if w is None:
            return CommandResult(name, "refuted", {"sign_symmetric": False}, ["not sign-symmetric"])
        return CommandResult(
            name, "ok", {"sign_symmetric": True, "witness": w.to_json()}, [f"sign-symmetric, witness {w.to_json()}"]
        )
    if kind in ("switching-iso", "iso", "cospectral"):
        if len(args.files) != 2:
            raise CliError("bad_arguments", f"{name} takes exactly two files")
        a, b = (_load(p) for p in args.files)
        if kind == "cospectral":
            ok = are_cospectral(a, b)
            return CommandResult(name, "ok" if ok else "refuted", {"cospectral": ok}, [f"cospectral: {ok}"])
        if kind == "iso":
            w = are_isomorphic(a, b)
        else:
            w = are_switching_isomorphic(a, b, limit=args.limit)
        if w is None:
            return CommandResult(name, "refuted", {"witness": None}, ["no witness"])
        return CommandResult(name, "ok", {"witness": w.to_json()}, [f"witness {w.to_json()}"])
    if kind == "coiso":
        if len(args.files) % 2:
            raise CliError("bad_arguments", "coiso takes an even number of files: first list, then second")
        items = _rooted(args.files, args.root)
        half = len(items) // 2
        ok = check_coiso(items[:half], items[half:])
        return CommandResult(name, "ok" if ok else "refuted", {"coiso": ok}, [f"coiso condition: {ok}"])
    raise CliError("unknown_subcommand", f"unknown check {kind!r}")


def cmd_neps(args) -> CommandResult:
    factors = [_load(p) for p in args.files]
    basis = _basis(args.basis)
    g = neps(factors, basis)
    result = CommandResult("neps", "ok", {"basis": basis.format(), "graph": _graph_json(g)}, [f"NEPS with {g.n} vertices, {g.m} edges"])
    _write_out(result, g, args.out, f"NEPS basis {basis.format()}")
    return result


def cmd_neps_certify(args) -> CommandResult:
    factors = [_load(p) for p in args.files]
    basis = _basis(args.basis)
    cert = neps_symmetry_certificate(factors, basis)
    data = {
        "certified": cert.certified,
        "reason": cert.reason,
        "involution": list(cert.involution.mapping) if cert.involution else None,
    }
    return CommandResult("neps-certify", "ok" if cert else "refuted", data, [f"certified: {cert.certified} ({cert.reason})"])


def _blocks(args, base: SignedGraph) -> list[RootedSignedGraph]:
    blocks = _rooted(args.blocks, args.root)
    if args.copies is not None:
        if len(blocks) != 1:
            raise CliError("bad_arguments", "--copies needs exactly one block file")
        blocks = blocks * args.copies
    if len(blocks) != base.n:
        raise CliError("bad_arguments", f"base graph has {base.n} vertices but {len(blocks)} blocks were given")
    return blocks


def cmd_rooted_product(args) -> CommandResult:
    base = _load(args.base)
    blocks = _blocks(args, base)
    g = rooted_product(base, blocks)
    formula = rooted_product_char_poly(base, blocks)
    data = {
        "graph": _graph_json(g),
        "char_poly": formula.to_list(),
        "formula_matches_direct": formula == char_poly(g),
    }
    result = CommandResult("rooted-product", "ok", data, [f"rooted product with {g.n} vertices, {g.m} edges"])
    _write_out(result, g, args.out, "rooted product")
    return result


def cmd_rooted_certify(args) -> CommandResult:
    base = _load(args.base)
    block = _rooted(args.blocks[:1], args.root)[0]
    cert = rooted_symmetry_certificate(base, block)
    return CommandResult(
        "rooted-certify",
        "ok" if cert else "refuted",
        {"certified": cert.certified, "reason": cert.reason},
        [f"certified: {cert.certified} ({cert.reason})"],
    )


def cmd_search(args) -> CommandResult:
    if args.search == "cospectral-rooted":
        pairs = find_cospectrally_rooted_pairs(args.n, limit=args.limit or DEFAULT_GRAPH_LIMIT)
        data = {
            "n": args.n,
            "count": len(pairs),
            "pairs": [
                {
                    "first": {**_graph_json(p.first.graph), "root": p.first.root},
                    "second": {**_graph_json(p.second.graph), "root": p.second.root},
                    "key_polynomials": p.key.to_json(),
                    "same_ground": p.same_ground,
                }
                for p in pairs
            ],
        }
        result = CommandResult("search cospectral-rooted", "ok" if pairs else "refuted", data, [f"{len(pairs)} cospectrally rooted pairs on {args.n} vertices"])
        if args.out:
            index = write_pair_results(args.out, pairs)
            data["index"] = str(index)
            result.lines.append(f"wrote {index}")
        return result
    if args.search == "signatures":
        ground = _load(args.ground)
        hits = enumerate_signatures(
            ground,
            PREDICATES[args.predicate],
            limit=args.limit or DEFAULT_EDGE_LIMIT,
            samples=args.samples,
            seed=args.seed,
            dedupe=not args.no_dedupe,
        )
        data = {"predicate": args.predicate, "count": len(hits), "hits": [_graph_json(h) for h in hits]}
        result = CommandResult("search signatures", "ok" if hits else "refuted", data, [f"{len(hits)} hits"])
        if args.out:
            index = write_graphs(args.out, hits)
            data["index"] = str(index)
            result.lines.append(f"wrote {index}")
        return result
    raise CliError("unknown_subcommand", f"unknown search {args.search!r}")


def cmd_fixture(args) -> CommandResult:
    g = sk8()
    result = CommandResult("fixture sk8", "ok", {"graph": _graph_json(g)}, [f"SK8: {g.n} vertices, {g.m} edges"])
    _write_out(result, g, args.out, "SK8: signed K8 with symmetric spectrum, not sign-symmetric")
    return result


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")

    parser = _Parser(prog="signedspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues and exact char poly")
    p.add_argument("file")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("charpoly", parents=[common], help="exact characteristic polynomial")
    p.add_argument("file")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("check", parents=[common], help="decision procedures")
    p.add_argument(
        "check", choices=["sym-spectrum", "sign-symmetric", "switching-iso", "iso", "cospectral", "coiso"]
    )
    p.add_argument("files", nargs="+")
    p.add_argument("--limit", type=int, default=DEFAULT_SWITCH_LIMIT, help="switching search size guard")
    p.add_argument("--root", help="comma-separated roots, one per file (coiso)")
    p.add_argument("--clique", action="store_true", help="decide sign-symmetry by the unique maximum clique")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("neps", parents=[common], help="NEPS product of factor graphs")
    p.add_argument("files", nargs="+")
    p.add_argument("--basis", required=True, help='e.g. "10,01", or a basis file')
    p.add_argument("--out")
    p.set_defaults(func=cmd_neps)

    p = sub.add_parser("neps-certify", parents=[common], help="sufficient condition for symmetric NEPS spectrum")
    p.add_argument("files", nargs="+")
    p.add_argument("--basis", required=True)
    p.set_defaults(func=cmd_neps_certify)

    for name, func, helptext in (
        ("rooted-product", cmd_rooted_product, "rooted product of a base graph by rooted blocks"),
        ("rooted-certify", cmd_rooted_certify, "sufficient condition for symmetric rooted product spectrum"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("base")
        p.add_argument("blocks", nargs="+")
        p.add_argument("--root", help="comma-separated root per block file")
        if name == "rooted-product":
            p.add_argument("--copies", type=int, help="repeat a single block this many times")
            p.add_argument("--out")
        p.set_defaults(func=func)

    p = sub.add_parser("search", help="enumeration")
    ssub = p.add_subparsers(dest="search", required=True, parser_class=_Parser)
    q = ssub.add_parser("cospectral-rooted", parents=[common])
    q.add_argument("n", type=int)
    q.add_argument("--limit", type=int)
    q.add_argument("--out")
    q.set_defaults(func=cmd_search)
    q = ssub.add_parser("signatures", parents=[common])
    q.add_argument("ground")
    q.add_argument("--predicate", choices=sorted(PREDICATES), default="symmetric-not-sign-symmetric")
    q.add_argument("--limit", type=int)
    q.add_argument("--samples", type=int)
    q.add_argument("--seed", type=int)
    q.add_argument("--no-dedupe", action="store_true")
    q.add_argument("--out")
    q.set_defaults(func=cmd_search)

    p = sub.add_parser("fixture", help="built-in graphs")
    fsub = p.add_subparsers(dest="fixture", required=True, parser_class=_Parser)
    q = fsub.add_parser("sk8", parents=[common])
    q.add_argument("--out")
    q.set_defaults(func=cmd_fixture)
    return parser


def execute(argv: Sequence[str] | None = None) -> tuple[CommandResult, bool]:
    """Run a command; returns the result and whether JSON output was requested."""
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    command = " ".join(a for a in argv[:2] if not a.startswith("-")) or "signedspec"
    try:
        args = build_parser().parse_args(argv)
        return args.func(args), want_json
    except CliError as exc:
        reason, message = exc.reason, str(exc)
    except SearchTooLarge as exc:
        reason, message = "search_too_large", str(exc)
    except SgFormatError as exc:
        reason, message = "malformed_sg", str(exc)
    except OSError as exc:
        reason, message = "unreadable_file", str(exc)
    except ValueError as exc:
        reason, message = "invalid_input", str(exc)
    result = CommandResult(command, "error", {"reason": reason, "message": message}, [f"error ({reason}): {message}"])
    return result, want_json


def run(argv: Sequence[str] | None = None, stream=None) -> int:
    stream = stream or sys.stdout
    result, want_json = execute(argv)
    if want_json:
        stream.write(json.dumps(result.to_json()) + "\n")
    else:
        out = sys.stderr if result.status == "error" else stream
        for line in result.lines:
            out.write(line + "\n")
    return result.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
