"""Command-line front end.

Exit status 0 on success, 1 when the input violates a required property
(the witness goes to stdout), 2 on usage or parse errors. Diagnostics go to
stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import acceptance
from .analysis import (
    all_linear_extensions,
    build_antichain_extension,
    forced_inversion_scan,
    one_linear_extension,
    ZigzagEmbedding,
)
from .extension import audit_extension, default_choice, extend_to_well_order
from .rank import compute_rank, decompose
from .relation import (
    EXHAUSTIVE_ANTICHAIN_LIMIT,
    FiniteRelation,
    NotTransitive,
    NotWellFounded,
    ParseError,
    RelationError,
    is_irreflexive,
    is_transitive,
    is_well_founded,
    parse_relation,
    require_well_founded,
    to_dot,
    transitive_closure,
)
from .tree import Cmp, chain_s, tree_L_compare, truncate, verify_tree_properties

LINEXT_EXHAUSTIVE_DEFAULT = 6


class PropertyViolation(Exception):
    def __init__(self, document):
        self.document = document
        super().__init__(str(document))


@dataclass
class CommandConfig:
    command: str
    input_path: Optional[str] = None
    output_format: str = "json"
    seed: Optional[int] = None
    max_exhaustive: Optional[int] = None
    close: bool = False
    audit: bool = False
    linext_mode: str = "one"
    antichain: Optional[list[int]] = None
    tree_action: Optional[str] = None
    depth: Optional[int] = None
    samples: int = 10_000
    args: tuple[int, ...] = ()


def _dumps(doc) -> str:
    return json.dumps(doc, separators=(",", ":"))


def _read_relation(cfg: CommandConfig) -> FiniteRelation:
    if cfg.input_path in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(cfg.input_path, encoding="utf-8") as fh:
            text = fh.read()
    rel = parse_relation(text)
    return transitive_closure(rel) if cfg.close else rel


def _labels(rel: FiniteRelation, xs) -> list:
    return [rel.label(x) for x in xs]


def _check(cfg: CommandConfig) -> str:
    rel = _read_relation(cfg)
    verdict = is_well_founded(rel)
    if verdict is not True:
        raise PropertyViolation({"cycle": _labels(rel, verdict.elements)})
    transitive = is_transitive(rel)
    doc = {
        "well_founded": True,
        "irreflexive": is_irreflexive(rel),
        "transitive": transitive,
        "partial_well_ordering": transitive,
    }
    if cfg.output_format == "text":
        return "\n".join(f"{k}: {str(v).lower()}" for k, v in doc.items())
    return _dumps(doc)


def _rank(cfg: CommandConfig) -> str:
    rel = _read_relation(cfg)
    rk = compute_rank(rel)
    if cfg.output_format == "dot":
        return to_dot(rel, rk.ranks).rstrip("\n")
    if cfg.output_format == "text":
        return "\n".join(f"{rel.label(x)}\t{rk[x]}" for x in rel.elements)
    return _dumps({"lambda": rk.lam, "ranks": list(rk.ranks)})


def _decompose(cfg: CommandConfig) -> str:
    rel = _read_relation(cfg)
    rk = compute_rank(rel)
    decomp = decompose(rel, rk)
    if cfg.output_format == "dot":
        return to_dot(rel, rk.ranks).rstrip("\n")
    if cfg.output_format == "text":
        return "\n".join(f"M_{a}: {' '.join(map(str, _labels(rel, lv)))}" for a, lv in enumerate(decomp.levels))
    return _dumps({"lambda": rk.lam, "levels": [_labels(rel, lv) for lv in decomp.levels]})


def _extend(cfg: CommandConfig) -> str:
    rel = _read_relation(cfg)
    require_well_founded(rel)
    closed = transitive_closure(rel)
    rk = compute_rank(closed)
    decomp = decompose(closed, rk)
    choice = default_choice(decomp, cfg.seed)
    w = extend_to_well_order(closed, decomp, choice)
    order = _labels(rel, w.order)
    if cfg.audit:
        report = audit_extension(closed, decomp, choice, w)
        doc = {
            "order": order,
            "audit": {"stage_edge_counts": list(report.stage_edge_counts), "union_matches": report.union_matches},
        }
        if not report.union_matches:
            raise PropertyViolation(doc)
        return _dumps(doc)
    if cfg.output_format == "text":
        return " < ".join(map(str, order))
    return _dumps(order)


def _linext(cfg: CommandConfig) -> str:
    rel = _read_relation(cfg)
    if cfg.linext_mode == "all":
        limit = cfg.max_exhaustive if cfg.max_exhaustive is not None else LINEXT_EXHAUSTIVE_DEFAULT
        exts = all_linear_extensions(rel, limit=limit)
        if cfg.output_format == "text":
            return "\n".join(" ".join(map(str, _labels(rel, e.order))) for e in exts)
        return _dumps({"count": len(exts), "extensions": [_labels(rel, e.order) for e in exts]})
    if cfg.linext_mode == "antichain":
        ext, witness = build_antichain_extension(rel, cfg.antichain)
        values = ZigzagEmbedding(tuple(cfg.antichain)).values
        return _dumps(
            {
                "order": _labels(rel, ext.order),
                "zigzag": [[rel.label(d), values[d]] for d in cfg.antichain],
                "witness": _labels(rel, witness.elements),
            }
        )
    ext = one_linear_extension(rel)
    if cfg.output_format == "text":
        return " < ".join(map(str, _labels(rel, ext.order)))
    return _dumps({"order": _labels(rel, ext.order)})


def _antichain_ext(cfg: CommandConfig) -> str:
    rel = _read_relation(cfg)
    limit = cfg.max_exhaustive if cfg.max_exhaustive is not None else EXHAUSTIVE_ANTICHAIN_LIMIT
    report = forced_inversion_scan(rel, exhaustive_limit=limit)
    doc = {
        "width": report.width,
        "antichain": _labels(rel, report.antichain),
        "witness_length": report.witness_length,
        "report": report.summary(),
    }
    if report.constructible:
        doc["witness"] = _labels(rel, report.witness.elements)
        doc["order"] = _labels(rel, report.extension.order)
    if cfg.output_format == "text":
        return report.summary()
    return _dumps(doc)


def _tree(cfg: CommandConfig) -> str:
    action = cfg.tree_action
    if action == "props":
        report = verify_tree_properties(cfg.depth, cfg.samples, seed=cfg.seed or 0)
        doc = report.as_dict()
        if not report.ok:
            raise PropertyViolation(doc)
        if cfg.output_format == "text":
            return "\n".join(f"{'ok  ' if v else 'FAIL'} {k}" for k, v in report.checks.items())
        return _dumps(doc)
    if action == "cmp":
        x, y = cfg.args
        return _dumps({"x": x, "y": y, "result": tree_L_compare(x, y).value})
    if action == "chain":
        (n,) = cfg.args
        ok = all(tree_L_compare(chain_s(k + 1), chain_s(k)) == Cmp.BEFORE for k in range(n))
        return _dumps({"n": n, "value": chain_s(n), "descending_prefix_ok": ok})
    if action == "export":
        rel = truncate(cfg.depth)
        if cfg.output_format == "dot":
            return to_dot(rel).rstrip("\n")
        return rel.to_edge_list().rstrip("\n")
    raise ValueError(f"unknown tree action {action!r}")


def _suite(cfg: CommandConfig) -> str:
    lines: list[str] = []
    # timing goes to stderr so stdout stays byte-identical across runs
    results = acceptance.run_all(
        echo=lambda line: lines.append(line) if line.startswith("[") else print(line, file=sys.stderr)
    )
    if not all(r.passed for r in results):
        raise PropertyViolation("\n".join(lines))
    return "\n".join(lines)


HANDLERS = {
    "check": _check,
    "rank": _rank,
    "decompose": _decompose,
    "extend": _extend,
    "linext": _linext,
    "antichain-ext": _antichain_ext,
    "tree": _tree,
    "suite": _suite,
}


def run(cfg: CommandConfig) -> int:
    try:
        out = HANDLERS[cfg.command](cfg)
    except PropertyViolation as exc:
        doc = exc.document
        print(doc if isinstance(doc, str) else _dumps(doc))
        return 1
    except NotWellFounded as exc:
        print(_dumps({"cycle": list(exc.witness.elements)}))
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NotTransitive as exc:
        print(_dumps({"missing_edge": list(exc.missing)}))
        print(f"error: {exc} (use --close to close the input first)", file=sys.stderr)
        return 1
    except (ParseError, OSError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RelationError as exc:
        print(_dumps({"error": str(exc)}))
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return 0


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("json", "dot", "text"), default="json")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--max-exhaustive", type=int, default=None)

    relation_input = argparse.ArgumentParser(add_help=False)
    relation_input.add_argument("input_path", nargs="?", default="-", help="edge-list file, or - for stdin")
    relation_input.add_argument("--close", action="store_true", help="transitively close the input first")

    parser = argparse.ArgumentParser(prog="wellext", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common, relation_input], help="decide well-foundedness and transitivity")
    sub.add_parser("rank", parents=[common, relation_input], help="rank function of a partial well ordering")
    sub.add_parser("decompose", parents=[common, relation_input], help="level sets of equal rank")
    p = sub.add_parser("extend", parents=[common, relation_input], help="extend to a well order")
    p.add_argument("--audit", action="store_true", help="rebuild stage relations and compare (n <= 6)")
    p = sub.add_parser("linext", parents=[common, relation_input], help="linear extensions")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--all", dest="linext_mode", action="store_const", const="all")
    mode.add_argument("--one", dest="linext_mode", action="store_const", const="one")
    mode.add_argument("--antichain", type=_int_list, metavar="d0,d1,...")
    sub.add_parser("antichain-ext", parents=[common, relation_input], help="longest forced descent via a widest antichain")

    tree = sub.add_parser("tree", help="the infinite binary tree and its non-well linear extension")
    tsub = tree.add_subparsers(dest="tree_action", required=True)
    p = tsub.add_parser("props", parents=[common])
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--samples", type=int, default=10_000)
    p = tsub.add_parser("cmp", parents=[common])
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p = tsub.add_parser("chain", parents=[common])
    p.add_argument("n", type=int)
    p = tsub.add_parser("export", parents=[common])
    p.add_argument("--depth", type=int, required=True)

    sub.add_parser("suite", parents=[common], help="run the acceptance battery")
    return parser


def config_from_args(ns: argparse.Namespace) -> CommandConfig:
    cfg = CommandConfig(
        command=ns.command,
        input_path=getattr(ns, "input_path", None),
        output_format=ns.output_format,
        seed=ns.seed,
        max_exhaustive=ns.max_exhaustive,
        close=getattr(ns, "close", False),
        audit=getattr(ns, "audit", False),
        tree_action=getattr(ns, "tree_action", None),
        depth=getattr(ns, "depth", None),
        samples=getattr(ns, "samples", 10_000),
    )
    if ns.command == "linext":
        cfg.antichain = ns.antichain
        cfg.linext_mode = "antichain" if ns.antichain is not None else (ns.linext_mode or "one")
    if cfg.tree_action == "cmp":
        cfg.args = (ns.x, ns.y)
    elif cfg.tree_action == "chain":
        cfg.args = (ns.n,)
    return cfg


def main(argv: Optional[Sequence[str]] = None) -> int:
    ns = build_parser().parse_args(argv)
    if ns.seed is not None and ns.command not in ("extend", "tree"):
        print("error: --seed only applies to extend and tree props", file=sys.stderr)
        return 2
    return run(config_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
