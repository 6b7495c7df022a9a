"""Command line front end.

Exit codes: 0 ok, 1 verification mismatch, 2 parse or usage error,
3 certificate failure, 4 enumeration or graph budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from typing import Optional, Sequence

from . import constructions as C
from .classify import (
    ALEPH0, count_aut_fixed, enumerate_aut_fixed, format_iso, is_aut_fixed, parse_ambient, parse_iso, rank_of,
)
from .endo import (
    BudgetExceeded, CertificateError, GroupElement, StdEndo, elements_equal, endo_from_json, endo_to_json,
    eval_endo, verify_automorphism,
)
from .fixpipe import DEFAULT_BUDGET, fix_subgroup, index_bound_check, oracle_check
from .stallings import GraphSizeError
from .words import format_word, identity_images, reduce

log = logging.getLogger("autfix")

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_CERT, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _emit(args, data: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        for line in lines:
            print(line)


def _rank_str(r) -> str:
    return "aleph0" if r == ALEPH0 else str(r)


def _rank_json(r):
    return "aleph0" if r == ALEPH0 else r


# -- classify / count / enumerate ----------------------------------------------------

def run_classify(args) -> int:
    amb = parse_ambient(args.ambient)
    a = parse_iso(args.subgroup)
    v = is_aut_fixed(amb, a)
    data = {"ambient": str(amb), "subgroup": format_iso(a), "aut_fixed": v.answer, "theorem": v.theorem_tag,
            "witness": v.witness}
    lines = [f"{'yes' if v.answer else 'no'}  {format_iso(a)} in {amb}", f"decided by: {v.theorem_tag}"]
    if v.witness:
        lines.append(f"witness recipe: {v.witness}")
    _emit(args, data, lines)
    return EXIT_OK


def run_count(args) -> int:
    amb = parse_ambient(args.ambient)
    c = count_aut_fixed(amb)
    data = {"ambient": str(amb), "count": "infinite" if c.infinite else c.value}
    if not c.infinite:
        listed = len(enumerate_aut_fixed(amb))
        data["enumerated"] = listed
        if listed != c.value:
            log.error("formula gives %s but enumeration lists %s types", c.value, listed)
            _emit(args, data, [str(c), f"MISMATCH: enumeration lists {listed}"])
            return EXIT_MISMATCH
    _emit(args, data, [str(c)])
    return EXIT_OK


def run_enumerate(args) -> int:
    amb = parse_ambient(args.ambient)
    bound = ALEPH0 if args.rank_bound is None else args.rank_bound
    if amb.k >= 2 and args.rank_bound is None:
        raise UsageError("the list is infinite for k >= 2; pass --rank-bound")
    types = enumerate_aut_fixed(amb, bound)
    data = {"ambient": str(amb), "types": [{"iso": format_iso(a), "rank": _rank_json(rank_of(a))} for a in types]}
    _emit(args, data, [f"{format_iso(a):<16} rank {_rank_str(rank_of(a))}" for a in types])
    return EXIT_OK


# -- recipes ------------------------------------------------------------------------

_PARAM_FLAGS = ("g", "t", "m", "k", "s", "n", "alpha", "target")


def _recipe_params(args, recipe: C.Recipe) -> dict:
    out = {}
    for p in recipe.params:
        if p == "ambient":
            if not args.ambient:
                raise UsageError(f"recipe {recipe.id} needs --ambient")
            out[p] = parse_ambient(args.ambient)
            continue
        val = getattr(args, p, None)
        if val is None:
            if p == "alpha":
                val = C.IDENTITY
            else:
                raise UsageError(f"recipe {recipe.id} needs --{p}")
        if p == "target":
            val = parse_iso(val)
        elif p == "n" and recipe.id == "rank_witness":
            val = ALEPH0 if str(val).lower() in ("inf", "aleph0", "infinite") else int(val)
        elif p != "alpha":
            val = int(val)
        out[p] = val
    return out


def _load_endo(args) -> tuple[StdEndo, Optional[StdEndo]]:
    if args.file:
        with open(args.file) as fh:
            try:
                return endo_from_json(json.load(fh))
            except (KeyError, TypeError, json.JSONDecodeError) as exc:
                raise UsageError(f"malformed endomorphism file: {exc}") from exc
    if not args.recipe:
        raise UsageError("give --recipe or --file")
    try:
        recipe = C.get_recipe(args.recipe)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    b = recipe.build(**_recipe_params(args, recipe))
    return b.endo, b.inverse


def run_construct(args) -> int:
    E, inv = _load_endo(args)
    text = json.dumps(endo_to_json(E, inv), indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def run_fix(args) -> int:
    E, _ = _load_endo(args)
    desc = fix_subgroup(E, stream_witnesses=args.witnesses if args.witnesses is not None else 5)
    data = desc.to_json(witnesses=args.witnesses)
    part = desc.projected
    rank = rank_of(part.iso)
    surf = E.ambient.is_surface
    lines = [
        f"iso: {format_iso(desc.iso)}",
        f"s: {desc.s}",
        f"projected: {part.tag} index={part.index if part.index is not None else 'infinite'} rank={_rank_str(rank)}",
    ]
    if part.note:
        lines.append(f"note: {part.note}")
        data["note"] = part.note
    ws = desc.witnesses if args.witnesses is None else desc.witnesses[:args.witnesses]
    for w in ws:
        lines.append(f"witness: ({format_word(w.u, surf) or '1'}, {list(w.v)})")
    status = EXIT_OK
    if E.expected_iso is not None:
        match = E.expected_iso == desc.iso
        data["expected"] = format_iso(E.expected_iso)
        lines.append(f"expected: {format_iso(E.expected_iso)} ({'match' if match else 'MISMATCH'})")
        status = EXIT_OK if match else EXIT_MISMATCH
    if args.brute_check is not None:
        rep = oracle_check(E, desc, args.brute_check, budget=args.budget)
        data["oracle"] = {"agree": rep.agree, "words_checked": rep.words_fixed_by_alpha, "max_len": rep.max_len,
                          "discrepancies": [list(map(str, d)) for d in rep.discrepancies]}
        lines.append(rep.summary())
        if not rep.agree:
            status = EXIT_MISMATCH
    _emit(args, data, lines)
    return status


# -- verify ---------------------------------------------------------------------------

def _random_element(rng: random.Random, E: StdEndo, length: int) -> GroupElement:
    n, k = E.ambient.word_rank, E.ambient.k
    letters = [rng.choice([1, -1]) * rng.randint(1, n) for _ in range(length)]
    return GroupElement(reduce(letters, n), tuple(rng.randint(-5, 5) for _ in range(k)))


def _surface_psi_checks(E: StdEndo) -> list[str]:
    """The listed generators are fixed and ``b_g`` is moved."""
    problems = []
    n = E.ambient.word_rank
    gens = identity_images(n)
    for w in E.alpha.fix:
        if not elements_equal(E.ambient, eval_endo(E, GroupElement(w, ())), GroupElement(w, ())):
            problems.append(f"{format_word(w, True)} not fixed")
    bg = gens[n - 1]
    if elements_equal(E.ambient, eval_endo(E, GroupElement(bg, ())), GroupElement(bg, ())):
        problems.append("b_g is fixed")
    return problems


def _verify_case(recipe: C.Recipe, params: dict, rng: random.Random, max_len: Optional[int],
                 budget: int) -> tuple[bool, str]:
    b = recipe.build(**params)
    E = b.endo
    desc = fix_subgroup(E)
    notes = []
    ok = desc.iso == b.expected
    if recipe.automorphism:
        if b.inverse is None or not verify_automorphism(E, b.inverse):
            ok = False
            notes.append("inverse fails")
        v = is_aut_fixed(E.ambient, desc.iso)
        if not v:
            ok = False
            notes.append("not aut-fixed by classification")
    else:
        # negative control: no integral inverse exists, and E is not its own inverse
        if verify_automorphism(E, E):
            ok = False
            notes.append("unexpectedly invertible")
        else:
            notes.append("not an automorphism (as expected)")
    if desc.projected.index not in (None, 1) and not index_bound_check(E, desc):
        ok = False
        notes.append("index bound violated")
    for _ in range(3):
        x, y = _random_element(rng, E, 6), _random_element(rng, E, 6)
        if not elements_equal(E.ambient, eval_endo(E, x * y), eval_endo(E, x) * eval_endo(E, y)):
            ok = False
            notes.append("not a homomorphism")
            break
    if recipe.id == "surface_psi":
        problems = _surface_psi_checks(E)
        ok = ok and not problems
        notes.extend(problems or ["generators fixed, b_g moved"])
    if max_len is not None:
        rep = oracle_check(E, desc, max_len, budget)
        ok = ok and rep.agree
        notes.append(rep.summary())
    pretty = ",".join(f"{k}={format_iso(v) if k == 'target' else v}" for k, v in params.items())
    line = (f"{'PASS' if ok else 'FAIL'} {recipe.id}({pretty}): expected {format_iso(b.expected)}, "
            f"computed {format_iso(desc.iso)}" + (f"; {'; '.join(notes)}" if notes else ""))
    return ok, line


def run_verify(args) -> int:
    if not args.all and not args.recipe:
        raise UsageError("give --all or --recipe")
    ids = list(C.RECIPES) if args.all else [args.recipe]
    rng = random.Random(args.seed)
    total = failed = 0
    lines, cases = [], []
    for rid in ids:
        try:
            recipe = C.get_recipe(rid)
        except KeyError as exc:
            raise UsageError(str(exc)) from exc
        for i, params in enumerate(recipe.grid):
            # the oracle runs on the first (smallest) grid point of each recipe
            ok, line = _verify_case(recipe, params, rng, args.max_len if i == 0 else None, args.budget)
            total += 1
            failed += not ok
            lines.append(line)
            cases.append({"recipe": rid, "ok": ok, "line": line})
    lines.append(f"all {total} cases pass" if not failed else f"{failed} of {total} cases FAIL")
    _emit(args, {"total": total, "failed": failed, "cases": cases}, lines)
    return EXIT_OK if not failed else EXIT_MISMATCH


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="autfix", description=(
        "Fixed subgroups of automorphisms of F_g x Z^k and surface group x Z^k."))
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    def source(p):
        p.add_argument("--recipe", help=f"one of: {', '.join(C.RECIPES)}")
        p.add_argument("--file", help="endomorphism JSON file")
        p.add_argument("--ambient", help="ambient for recipes that take one, e.g. surface:g=2,k=2")
        for flag in _PARAM_FLAGS:
            p.add_argument(f"--{flag}")

    p = sub.add_parser("classify", help="is an isomorphism type aut-fixed?")
    p.add_argument("--ambient", required=True)
    p.add_argument("--subgroup", required=True)
    common(p)
    p.set_defaults(func=run_classify)

    p = sub.add_parser("fix", help="compute the fixed subgroup of an endomorphism")
    source(p)
    p.add_argument("--witnesses", type=int, default=None, help="number of witnesses to print")
    p.add_argument("--brute-check", type=int, default=None, metavar="L", help="run the oracle to word length L")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common(p)
    p.set_defaults(func=run_fix)

    p = sub.add_parser("construct", help="print a catalog endomorphism as JSON")
    source(p)
    p.add_argument("--out", help="write to this file")
    common(p)
    p.set_defaults(func=run_construct, json=True)

    p = sub.add_parser("count", help="number of aut-fixed types")
    p.add_argument("--ambient", required=True)
    common(p)
    p.set_defaults(func=run_count)

    p = sub.add_parser("enumerate", help="list aut-fixed types")
    p.add_argument("--ambient", required=True)
    p.add_argument("--rank-bound", type=int, default=None)
    common(p)
    p.set_defaults(func=run_enumerate)

    p = sub.add_parser("verify", help="check the catalog against the pipeline and the oracle")
    p.add_argument("--all", action="store_true")
    p.add_argument("--recipe")
    p.add_argument("--max-len", type=int, default=None, help="oracle word length bound")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common(p)
    p.set_defaults(func=run_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except CertificateError as exc:
        print(f"certificate error: {exc}", file=sys.stderr)
        return EXIT_CERT
    except (UsageError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (BudgetExceeded, GraphSizeError) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
