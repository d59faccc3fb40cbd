"""Command line: law suites, round trips, hom listings and substitution.

    lawvere laws      --spec monoid.json [--nmax 3] [--bound 3] [--json out.json]
    lawvere roundtrip --spec free_monoid.json
    lawvere hom       --spec maybe.json --m 1 --n 1
    lawvere subst     --spec monoid.json --term "(mul x0 e)" --with "(mul x1 x0)"
    lawvere render    out.json

Exit status: 0 when every report passes, 1 on a law or round-trip failure,
2 on bad input (the message says where).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .cat import DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TABLE_CAP, LawReport, all_passed
from .equivalence import RoundTripReport, check_round_trip, rml
from .errors import LawvereError, ScopeError, TermSyntaxError
from .finset import FinFunction
from .relmonad import (JfRelativeMonad, KleisliMor, builtin_morphisms, check_relmonad_laws,
                       eval_terms_in_words, free_monoid_monad, free_term_monad, from_identity,
                       identity_monad, kleisli, maybe_monad, monoid_term_monad, rm_identity,
                       term_monad, terminal_monad, to_terminal)
from .terms import (DEFAULT_FUEL, MONOID_RULES, MONOID_SIGNATURE, RewriteSystem, Signature,
                    check_scope, parse as parse_term, subst, variables)
from .theory import (LawvereTheory, builtin_theory_morphisms, check_lawvere_structure,
                     finset_theory, free_term_theory, from_initial, identity_theory_morphism,
                     monoid_theory, presented_theory)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

MONAD_BUILTINS = {
    "identity": identity_monad,
    "maybe": maybe_monad,
    "free_monoid": free_monoid_monad,
    "terminal": terminal_monad,
}
BOUND_KEYS = ("nmax", "size_bound", "table_cap", "seed", "fuel")


class InputError(Exception):
    """Bad spec or flags; the message already carries the location."""


@dataclass
class Spec:
    kind: str
    builtin: str | None = None
    signature: Signature | None = None
    rules: list = field(default_factory=list)
    bounds: dict = field(default_factory=dict)
    path: str = "<spec>"


# ---------------------------------------------------------------------------
# spec loading


def load_spec(path) -> Spec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: cannot read spec: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_spec(data, str(path))


def parse_spec(data, path="<spec>") -> Spec:
    def bad(where, msg):
        raise InputError(f"{path}: {where}: {msg}")

    if not isinstance(data, dict):
        bad("top level", "expected a JSON object")
    unknown = set(data) - {"kind", "builtin", "signature", "rules", "bounds"}
    if unknown:
        bad(sorted(unknown)[0], "unknown field")

    kind = data.get("kind")
    if kind not in ("monad", "theory"):
        bad("kind", f"expected \"monad\" or \"theory\", got {kind!r}")
    builtin = data.get("builtin")
    if builtin is not None and builtin not in (*MONAD_BUILTINS, "term"):
        bad("builtin", f"unknown builtin {builtin!r}")

    signature = None
    if "signature" in data:
        raw = data["signature"]
        if not isinstance(raw, list):
            bad("signature", "expected a list of {op, arity}")
        ops = []
        for i, entry in enumerate(raw):
            if not isinstance(entry, dict) or set(entry) != {"op", "arity"}:
                bad(f"signature[{i}]", "expected exactly the fields op and arity")
            if not isinstance(entry["arity"], int) or isinstance(entry["arity"], bool):
                bad(f"signature[{i}].arity", "expected a natural number")
            ops.append((entry["op"], entry["arity"]))
        try:
            signature = Signature(ops)
        except LawvereError as exc:
            bad("signature", str(exc))
    if builtin is None and signature is None:
        bad("builtin", "give a builtin or a signature")
    if builtin == "term" and signature is None:
        bad("builtin", "builtin \"term\" requires a signature")
    if builtin in MONAD_BUILTINS and signature is not None:
        bad("signature", f"builtin {builtin!r} takes no signature")

    rules = []
    raw_rules = data.get("rules", [])
    if not isinstance(raw_rules, list):
        bad("rules", "expected a list of {lhs, rhs}")
    if raw_rules and signature is None:
        bad("rules", "rules need a signature")
    for i, rule in enumerate(raw_rules):
        if not isinstance(rule, dict) or set(rule) != {"lhs", "rhs"}:
            bad(f"rules[{i}]", "expected exactly the fields lhs and rhs")
        sides = []
        for side in ("lhs", "rhs"):
            if not isinstance(rule[side], str):
                bad(f"rules[{i}].{side}", "expected a term string")
            try:
                sides.append(parse_term(rule[side], signature))
            except TermSyntaxError as exc:
                bad(f"rules[{i}].{side}", str(exc))
        lhs, rhs = sides
        if not hasattr(lhs, "op"):
            bad(f"rules[{i}].lhs", "left side may not be a bare variable")
        extra = variables(rhs) - variables(lhs)
        if extra:
            bad(f"rules[{i}].rhs", f"variable x{min(extra)} does not occur on the left")
        rules.append((lhs, rhs))

    bounds = data.get("bounds", {})
    if not isinstance(bounds, dict):
        bad("bounds", "expected an object")
    for k, v in bounds.items():
        if k not in BOUND_KEYS:
            bad(f"bounds.{k}", "unknown bound")
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            bad(f"bounds.{k}", "expected a natural number")
    return Spec(kind, builtin, signature, rules, dict(bounds), path)


def _is_monoid_presentation(spec: Spec):
    return (spec.signature == MONOID_SIGNATURE
            and spec.rules == [(parse_term(l), parse_term(r)) for l, r in MONOID_RULES])


def build(spec: Spec, fuel=DEFAULT_FUEL):
    """The monad or theory a spec describes, plus its naturality catalog.

    Specs that coincide with a builtin reuse the builtin object, so the
    builtin catalog (eval, normalize, ...) applies to them.
    """
    if spec.kind == "monad":
        if spec.builtin in MONAD_BUILTINS:
            return MONAD_BUILTINS[spec.builtin](), None
        if fuel == DEFAULT_FUEL and spec.signature == MONOID_SIGNATURE:
            if not spec.rules:
                return free_term_monad(), None
            if _is_monoid_presentation(spec):
                return monoid_term_monad(), None
        system = RewriteSystem(spec.signature, spec.rules, fuel)
        monad = term_monad(spec.signature, system, name=f"term({Path(spec.path).stem})")
        catalog = [rm_identity(monad), to_terminal(monad), from_identity(monad)]
        if spec.signature == MONOID_SIGNATURE:
            catalog.append(eval_terms_in_words(monad))
        return monad, catalog

    if spec.builtin == "identity":
        return finset_theory(), None
    if spec.builtin in MONAD_BUILTINS:
        theory = rml(MONAD_BUILTINS[spec.builtin]())
        return theory, [identity_theory_morphism(theory), from_initial(theory)]
    if fuel == DEFAULT_FUEL and spec.signature == MONOID_SIGNATURE:
        if not spec.rules:
            return free_term_theory(), None
        if _is_monoid_presentation(spec):
            return monoid_theory(), None
    system = RewriteSystem(spec.signature, spec.rules, fuel)
    theory = presented_theory(spec.signature, system, name=f"Th({Path(spec.path).stem})")
    return theory, [identity_theory_morphism(theory), from_initial(theory)]


# ---------------------------------------------------------------------------
# rendering


def render_document(doc) -> str:
    """Text output for a report document; also used to re-render a JSON file."""
    lines = [f"{doc['command']}: {doc['subject']}"]
    match doc["command"]:
        case "laws":
            lines += [LawReport.from_json(r).render() for r in doc["reports"]]
            failed = sum(r["status"] != "pass" for r in doc["reports"])
            total = len(doc["reports"])
        case "roundtrip":
            rt = RoundTripReport.from_json(doc["roundtrip"])
            lines.append(rt.render())
            failed = len(rt.failures())
            total = len(rt.reports)
        case other:
            raise InputError(f"unknown report command {other!r}")
    verdict = "all passed" if failed == 0 else f"{failed} failed"
    lines.append(f"{total} report(s), {verdict}")
    return "\n".join(lines) + "\n"


def _emit(doc, args):
    sys.stdout.write(render_document(doc))
    if args.json:
        Path(args.json).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def show_morphism(f, subject) -> str:
    """Canonical one-line form: F tables as ``m->n:[..]``, others as JSON arrays."""
    if isinstance(f, FinFunction):
        return str(f)
    if isinstance(f, KleisliMor):
        key = subject.carrier(f.cod).key
        return json.dumps([key(x) for x in f.table], separators=(",", ":"))
    return json.dumps(f.to_json(), separators=(",", ":"))


# ---------------------------------------------------------------------------
# commands


def _settings(spec: Spec, args):
    b = spec.bounds
    pick = lambda flag, key, default: flag if flag is not None else b.get(key, default)
    return dict(
        nmax=pick(args.nmax, "nmax", 3),
        bound=pick(args.bound, "size_bound", 3),
        table_cap=pick(args.table_cap, "table_cap", DEFAULT_TABLE_CAP),
        seed=pick(args.seed, "seed", DEFAULT_SEED),
        fuel=pick(args.fuel, "fuel", DEFAULT_FUEL),
    )


def _load(args):
    spec = load_spec(args.spec)
    s = _settings(spec, args)
    obj, catalog = build(spec, s["fuel"])
    return spec, s, obj, catalog


def cmd_laws(args) -> int:
    _, s, obj, _ = _load(args)
    if isinstance(obj, JfRelativeMonad):
        reports = check_relmonad_laws(obj, s["nmax"], s["bound"], s["table_cap"], s["seed"],
                                      DEFAULT_SAMPLES)
    else:
        reports = check_lawvere_structure(obj, s["nmax"], s["bound"], s["table_cap"],
                                          DEFAULT_SAMPLES, s["seed"])
    _emit({"command": "laws", "subject": obj.name, "reports": [r.to_json() for r in reports]},
          args)
    return EXIT_OK if all_passed(reports) else EXIT_FAIL


def cmd_roundtrip(args) -> int:
    _, s, obj, catalog = _load(args)
    report = check_round_trip(obj, s["nmax"], s["bound"], s["table_cap"], s["seed"],
                              DEFAULT_SAMPLES, morphisms=catalog)
    _emit({"command": "roundtrip", "subject": obj.name, "roundtrip": report.to_json()}, args)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_hom(args) -> int:
    if args.m is None or args.n is None:
        raise InputError("hom needs --m and --n")
    if args.m < 0 or args.n < 0:
        raise InputError("--m and --n must be natural numbers")
    _, s, obj, _ = _load(args)
    cat = kleisli(obj) if isinstance(obj, JfRelativeMonad) else obj.category
    count = 0
    for f in cat.hom(args.m, args.n, s["bound"]):
        print(show_morphism(f, obj))
        count += 1
    print(f"count: {count}")
    return EXIT_OK


def cmd_subst(args) -> int:
    if args.term is None:
        raise InputError("subst needs --term")
    _, s, obj, _ = _load(args)
    system = getattr(obj, "rewriting", None)
    signature = system.signature if system is not None else None
    if signature is None:
        raise InputError(f"{args.spec}: subst needs a term monad or presented theory")

    def read(text, where):
        try:
            return parse_term(text, signature)
        except TermSyntaxError as exc:
            raise InputError(f"{where}: {exc}") from None

    subs = [read(t, f"--with[{i}]") for i, t in enumerate(args.with_ or [])]
    term = read(args.term, "--term")
    n = args.n if args.n is not None else 1 + max(
        (max(variables(t), default=-1) for t in subs), default=-1)
    try:
        check_scope(term, len(subs))
        for i, t in enumerate(subs):
            try:
                check_scope(t, n)
            except ScopeError as exc:
                raise ScopeError(f"--with[{i}]: {exc}", exc.variable) from None
        print(system.normalize(subst(term, subs)))
    except ScopeError as exc:
        raise InputError(f"scope error: {exc}") from None
    return EXIT_OK


def cmd_render(args) -> int:
    try:
        doc = json.loads(Path(args.report).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"{args.report}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.report}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    sys.stdout.write(render_document(doc))
    ok = (all(r["status"] == "pass" for r in doc["reports"]) if doc["command"] == "laws"
          else doc["roundtrip"]["status"] == "pass")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lawvere", description="Check relative monads and Lawvere theories on bounded data.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--spec", required=True, help="monad or theory spec (JSON)")
        p.add_argument("--nmax", type=int, help="largest object checked (default 3)")
        p.add_argument("--bound", type=int, help="element / term size bound (default 3)")
        p.add_argument("--table-cap", type=int, help="exhaustive below this many cases")
        p.add_argument("--seed", type=int, help="sampling seed")
        p.add_argument("--fuel", type=int, help="rewrite step budget")
        p.add_argument("--json", metavar="PATH", help="also write the reports as JSON")
        return p

    common(sub.add_parser("laws", help="run the law suite")).set_defaults(run=cmd_laws)
    common(sub.add_parser("roundtrip", help="check the round-trip isomorphism")).set_defaults(
        run=cmd_roundtrip)
    p = common(sub.add_parser("hom", help="list a hom-set"))
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(run=cmd_hom)
    p = common(sub.add_parser("subst", help="substitute terms for variables"))
    p.add_argument("--term")
    p.add_argument("--with", dest="with_", nargs="*", metavar="TERM", default=[])
    p.add_argument("--n", type=int, help="variables available to the substituents")
    p.set_defaults(run=cmd_subst)
    p = sub.add_parser("render", help="re-render a JSON report file as text")
    p.add_argument("report")
    p.set_defaults(run=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LawvereError as exc:
        # contract errors raised while building from an otherwise valid spec
        print(f"error: {args.spec}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
