"""``symcoset`` command line.

Exit codes: 0 every check passed, 1 a mathematical check failed, 2 a cap or
resource limit stopped the run, 3 the input could not be used.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import __version__
from .analysis import (
    automorphism_group,
    connected_components,
    s_arc_transitivity,
)
from .cosets import (
    ActionHomomorphism,
    CosetGraphSpec,
    SearchCaps,
    build_coset_graph,
    search_feasible,
    verify_example,
    verify_feasible,
)
from .errors import CapExceeded, SymcosetError
from .graphs import read_edge_list
from .models import describe, parse_group_literal, resolve_group
from .perm import format_cycles, parse_cycles
from .tables import (
    canonical_type_name,
    check_table2_arithmetic,
    lemma27_pairs,
    manifest_hash,
    simple_orders_dividing,
)

EXIT_PASS, EXIT_FAIL, EXIT_CAP, EXIT_INPUT = 0, 1, 2, 3


@dataclass
class ReproReport:
    command: str
    inputs: dict
    verdicts: list = field(default_factory=list)
    timings_ms: Optional[dict] = None
    cap_hit: bool = False

    @property
    def passed(self) -> bool:
        return all(v["passed"] is not False for v in self.verdicts)

    def add(self, check: str, passed: Optional[bool], **detail) -> None:
        self.verdicts.append({"check": check, "passed": passed, **detail})

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "verdicts": self.verdicts,
            "passed": self.passed,
            "cap_hit": self.cap_hit,
            "timings_ms": self.timings_ms,
            "version": __version__,
            "data_manifest_sha256": manifest_hash(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _status(passed: Optional[bool]) -> str:
    return {True: "PASS", False: "FAIL", None: "NOTE"}[passed]


def _print_report(report: ReproReport, out) -> None:
    for v in report.verdicts:
        extra = {k: val for k, val in v.items() if k not in ("check", "passed") and not isinstance(val, (dict, list))}
        tail = " ".join(f"{k}={val}" for k, val in sorted(extra.items()))
        print(f"{_status(v['passed'])} {v['check']} {tail}".rstrip(), file=out)
    status = "CAP" if report.cap_hit else ("PASS" if report.passed else "FAIL")
    print(f"{status} {report.command}", file=out)


def _caps(args) -> SearchCaps:
    return SearchCaps(
        element_scan=args.element_cap,
        subgroup=args.subgroup_cap,
        orbit=args.orbit_cap,
        vertices=args.vertex_cap,
        canonical=args.canon_cap,
    )


def _add_cap_flags(p: argparse.ArgumentParser) -> None:
    d = SearchCaps()
    p.add_argument("--element-cap", type=int, default=d.element_scan, help="largest group order scanned element by element")
    p.add_argument("--subgroup-cap", type=int, default=d.subgroup, help="largest normalizer whose subgroups are listed")
    p.add_argument("--orbit-cap", type=int, default=d.orbit, help="largest conjugacy orbit in the normalizer computation")
    p.add_argument("--vertex-cap", type=int, default=d.vertices, help="largest coset graph built")
    p.add_argument("--canon-cap", type=int, default=d.canonical, help="largest graph given a canonical form")


# -- commands ------------------------------------------------------------------------


def cmd_verify_example(args) -> ReproReport:
    report = ReproReport("verify-example", {"n": list(args.n)})
    for n in args.n:
        verdict = verify_example(n)
        detail = {s.name: s.detail for s in verdict.stages}
        report.add(f"example_{n}", verdict.passed, failed_stage=verdict.failed_stage,
                   order_H=verdict.value("order_H"), intersection=verdict.value("intersection_order"),
                   valency=verdict.value("valency"), stages=detail)
    return report


def _search_verdict(report: ReproReport, label: str, res, expect: Optional[str]) -> None:
    passed = None
    if res.empty_kind == "cap_prevented":
        # an answer cut short by a cap proves nothing either way
        report.cap_hit = True
        passed = False if expect else None
    elif expect == "empty":
        passed = res.empty
    elif expect == "nonempty":
        passed = not res.empty
    report.add(label, passed, expected=expect, empty=res.empty, empty_kind=res.empty_kind,
               classes=res.class_count, search=res.to_dict())


def cmd_lemma27(args) -> ReproReport:
    caps = _caps(args)
    table = lemma27_pairs()
    if args.g or args.stab:
        if not (args.g and args.stab):
            raise ValueError("--g and --stab go together")
        pairs = [(None, args.g, args.stab)]
    else:
        pairs = [(c, g, t) for c, g, t in table] + [(None, "A7", "Z7")]
    in_table = {(g, canonical_type_name(t)) for _, g, t in table}
    report = ReproReport("lemma27", {
        "pairs": [{"G": g, "stabilizer": t} for _, g, t in pairs],
        "caps": caps.to_dict(),
        "models": {g: describe(g) for _, g, _ in pairs},
    })
    stamps = {}
    for _, gname, tname in pairs:
        t0 = time.perf_counter()
        G = resolve_group(gname)
        res = search_feasible(G, tname, 7, caps, group_name=gname, timings=args.timings)
        key = (gname, canonical_type_name(tname))
        if key in in_table:
            expect = "empty"
        elif key == ("A7", "Z7"):
            expect = "nonempty"
        else:
            expect = None
        _search_verdict(report, f"{gname}|{key[1]}", res, expect)
        stamps[f"{gname}|{key[1]}"] = round((time.perf_counter() - t0) * 1000, 3)
    report.timings_ms = stamps if args.timings else None
    return report


def cmd_search(args) -> ReproReport:
    caps = _caps(args)
    G = resolve_group(args.group)
    report = ReproReport("search", {
        "group": args.group, "stabilizer": args.stab, "valency": args.valency,
        "degree": G.degree, "caps": caps.to_dict(),
    })
    res = search_feasible(G, args.stab, args.valency, caps, group_name=args.group, timings=args.timings)
    _search_verdict(report, "search", res, args.expect)
    return report


def _subgroup(text: str, G):
    """``stab:i`` for a point stabilizer, a group file or built-in, or ``;``-separated cycles."""
    from .groups import PermutationGroup

    if text.startswith("stab:"):
        return G.stabilizer(int(text[5:]))
    if Path(text).is_file() or not text.lstrip().startswith("("):
        H = resolve_group(text)
    else:
        H = PermutationGroup([parse_cycles(s, G.degree) for s in text.split(";")], degree=G.degree)
    if H.degree < G.degree:
        H = PermutationGroup([h.pad(G.degree) for h in H.generators], degree=G.degree)
    return H


def cmd_build(args) -> ReproReport:
    G = resolve_group(args.group)
    H = _subgroup(args.subgroup, G)
    g = parse_cycles(args.connector, G.degree)
    spec = CosetGraphSpec(G, H, g)
    feas = verify_feasible(spec, args.valency)
    graph, action = build_coset_graph(spec, args.vertex_cap)
    text = graph.to_dot() if args.export == "dot" else graph.to_edge_list()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.action_out:
        lines = [f"degree: {graph.vertex_count}"]
        lines += [format_cycles(_vperm(img)) for img in action.generator_images]
        Path(args.action_out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    report = ReproReport("build", {
        "group": args.group, "subgroup": args.subgroup, "connector": format_cycles(g),
        "export": args.export, "vertex_cap": args.vertex_cap,
    })
    report.add("feasibility", feas.feasible_for(args.valency) if args.valency else None,
               **feas.to_dict(args.valency))
    report.add("graph", None, vertices=graph.vertex_count, edges=graph.edge_count,
               valency=graph.valency(), components=len(connected_components(graph)),
               action_preserves_edges=action.preserves(graph))
    return report


def _vperm(img):
    from .perm import Permutation

    return Permutation._from_raw(tuple(img))


def cmd_analyze(args) -> ReproReport:
    graph = read_edge_list(Path(args.graph).read_text(encoding="utf-8"))
    report = ReproReport("analyze", {
        "graph": args.graph, "action": args.action, "s_max": args.s_max,
        "aut": args.aut, "vertex_cap": args.vertex_cap,
    })
    comps = connected_components(graph)
    report.add("structure", None, vertices=graph.vertex_count, edges=graph.edge_count,
               valency=graph.valency(), components=len(comps))
    A = None
    if args.aut:
        A = automorphism_group(graph, args.vertex_cap)
        report.add("automorphism_group", None, order=A.order(),
                   generators=[format_cycles(a) for a in A.generators])
    if args.s_max is not None:
        if args.action:
            G = parse_group_literal(Path(args.action).read_text(encoding="utf-8"))
            if G.degree != graph.vertex_count:
                raise ValueError("action degree must equal the vertex count")
            action = ActionHomomorphism(graph.vertex_count, [g.raw for g in G.generators])
            used = f"action from {args.action}"
            if not action.preserves(graph):
                report.add("action_preserves_edges", False)
        else:
            A = A or automorphism_group(graph, args.vertex_cap)
            action = ActionHomomorphism(graph.vertex_count, [a.raw for a in A.generators])
            used = "full automorphism group"
        s = s_arc_transitivity(graph, action, args.s_max, arc_cap=args.arc_cap)
        report.add("s_arc_transitivity", None, max_s_transitive=s.max_s_transitive,
                   group_used=used, arcs=s.to_dict())
    return report


def cmd_tables(args) -> ReproReport:
    report = ReproReport("tables", {"check": args.check, "divisor": args.divisor})
    found = simple_orders_dividing(args.divisor)
    expected = None
    if args.divisor == 504:
        expected = [["PSL(2,7)", 168], ["PSL(2,8)", 504]]
    report.add("simple_orders_dividing", None if expected is None else [list(r) for r in found] == expected,
               divisor=args.divisor, groups=[list(r) for r in found])
    if args.check:
        for v in check_table2_arithmetic():
            report.add(f"table2 {v.group} {v.subgroup}", v.passed, printed_index=v.printed_index,
                       computed_index=v.computed_index)
    return report


# -- entry point ------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # usage mistakes are input errors, not argparse's default status 2 (reserved for caps)
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="symcoset", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", metavar="PATH", help="write the machine-readable report here")
        sp.add_argument("--timings", action="store_true", help="include wall-clock timings (breaks byte stability)")

    sp = sub.add_parser("verify-example", help="check a bundled regular-subgroup example")
    sp.add_argument("--n", type=int, nargs="+", choices=(21, 63, 84), required=True)
    common(sp)
    sp.set_defaults(func=cmd_verify_example)

    sp = sub.add_parser("lemma27", help="feasible-connector searches over the 7-valent nonexistence table")
    sp.add_argument("--g", help="run one group instead of the whole table")
    sp.add_argument("--stab", help="stabilizer type for --g")
    _add_cap_flags(sp)
    common(sp)
    sp.set_defaults(func=cmd_lemma27)

    sp = sub.add_parser("search", help="search one group for feasible connectors")
    sp.add_argument("--group", required=True, help="built-in name or group literal file")
    sp.add_argument("--stab", required=True, help="stabilizer type, e.g. F42xZ2")
    sp.add_argument("--valency", type=int, default=7)
    sp.add_argument("--expect", choices=("empty", "nonempty"))
    _add_cap_flags(sp)
    common(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("build", help="build a coset graph and export it")
    sp.add_argument("--group", required=True)
    sp.add_argument("--subgroup", required=True, help="stab:i, a group file or built-in, or ';'-separated cycles")
    sp.add_argument("--connector", required=True)
    sp.add_argument("--valency", type=int)
    sp.add_argument("--export", choices=("dot", "edges"), default="edges")
    sp.add_argument("--out", help="graph file (default: standard output)")
    sp.add_argument("--action-out", help="write the group action on vertices as a group literal file")
    sp.add_argument("--vertex-cap", type=int, default=SearchCaps().vertices)
    common(sp)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("analyze", help="connectivity, automorphisms and s-arc transitivity of a graph file")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--action", help="group literal file acting on the vertices")
    sp.add_argument("--s-max", type=int, choices=(0, 1, 2, 3))
    sp.add_argument("--aut", action="store_true")
    sp.add_argument("--vertex-cap", type=int, default=2000)
    sp.add_argument("--arc-cap", type=int, default=10**6)
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("tables", help="query and check the bundled tables")
    sp.add_argument("--check", action="store_true", help="also check the index arithmetic of the primitive-group table")
    sp.add_argument("--divisor", type=int, default=504)
    common(sp)
    sp.set_defaults(func=cmd_tables)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # build writes the graph to stdout unless --out is given, so keep stdout clean then
    out = sys.stderr if args.command == "build" and not getattr(args, "out", None) else sys.stdout
    try:
        report = args.func(args)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except MemoryError:
        print("out of memory", file=sys.stderr)
        return EXIT_CAP
    except (SymcosetError, ValueError, KeyError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _print_report(report, out)
    if args.json:
        Path(args.json).write_text(report.to_json(), encoding="utf-8")
    if report.cap_hit:
        return EXIT_CAP
    return EXIT_PASS if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
