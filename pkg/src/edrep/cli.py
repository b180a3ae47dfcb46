"""Command line interface: ``edrep <subcommand> ...``.

Every subcommand prints JSON (sorted keys) by default or a text report with
``--format text``.  Exit status: 0 on success, 1 on malformed input, 2 when
the method cannot certify an answer.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .arith import DEFAULT_RHO_BUDGET
from .characters import Character, character_table
from .cyclotomic import BaseField
from .eddim import CsaDescriptor, cd_p_weil, cd_p_weil_gcd, ed_report, is_p_incompressible
from .errors import CertificationError, EdrepError, InputError
from .families import brauer_family, schilling_family
from .groups import DEFAULT_CAP, FiniteGroup, direct_product, quaternion_semidirect, schilling_two_group
from .modular import ModularRep, ed_lower_bound_modular, rank_variety
from .schur import norm_independence_test, schur_index


def dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _load_field(arg: str) -> BaseField:
    if arg.strip().upper() in ("Q", "QQ"):
        return BaseField.rationals()
    data = _load_json(arg)
    try:
        return BaseField.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, EdrepError):
            raise
        raise InputError(f"malformed field JSON: {exc}") from exc


def _load_group(path: str, cap: int) -> FiniteGroup:
    data = _load_json(path)
    try:
        return FiniteGroup.from_json(data.get("group", data), cap=cap)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed group JSON: {exc}") from exc


def _load_character(path: str, group: FiniteGroup | None, cap: int) -> Character:
    data = _load_json(path)
    try:
        if group is None:
            group = FiniteGroup.from_json(data["group"], cap=cap)
        return Character.from_json(data, group)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed character JSON: {exc}") from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"expected a comma separated list of integers, got {text!r}") from exc


def _emit(args, payload: dict, text: str) -> None:
    print(dump(payload) if args.format == "json" else text)


# subcommands ------------------------------------------------------------------------

def cmd_group(args) -> int:
    if args.kind == "quaternion-semidirect":
        if args.p is None:
            raise InputError("--p is required")
        G = quaternion_semidirect(args.p)
    elif args.kind == "schilling":
        if args.s is None:
            raise InputError("--s is required")
        G = schilling_two_group(args.s)
    else:
        if not args.inputs:
            raise InputError("product needs at least one group file")
        G = direct_product([_load_group(f, args.cap) for f in args.inputs], cap=args.cap)
    text = f"{G.name or 'group'}: order {G.order}, {G.num_classes} classes, exponent {G.exponent}"
    _emit(args, G.to_json(), text)
    return 0


def cmd_char_table(args) -> int:
    G = _load_group(args.group, args.cap)
    T = character_table(G, seed=args.seed)
    _emit(args, T.to_json(), T.to_text())
    return 0


def cmd_schur_index(args) -> int:
    chi = _load_character(args.char, None, args.cap)
    k = _load_field(args.field)
    res = schur_index(chi, k, args.hint)
    _emit(args, res.to_json(), f"m = {res.value} [{res.strategy.value}]\n{res.certificate}")
    return 0


def cmd_brauer_independence(args) -> int:
    cert = norm_independence_test(_int_list(args.primes), budget=args.budget)
    _emit(args, cert.to_json(), cert.to_text())
    return 0 if cert.passed else 2


def _parse_hints(items) -> dict[int, int]:
    hints = {}
    for item in items or []:
        try:
            i, m = item.split("=")
            hints[int(i)] = int(m)
        except ValueError as exc:
            raise InputError(f"hint must look like INDEX=VALUE, got {item!r}") from exc
    return hints


def cmd_ed(args) -> int:
    G = _load_group(args.group, args.cap)
    chi = _load_character(args.char, G, args.cap)
    k = _load_field(args.field)
    report = ed_report(G, k, chi, _int_list(args.primes), schur_hints=_parse_hints(args.hint))
    _emit(args, report.to_json(), report.to_text())
    return 0


def cmd_cd_weil(args) -> int:
    d = CsaDescriptor(args.center_degree, args.deg, args.m if args.j is None else 1, args.balanced)
    value = cd_p_weil(d, args.p) if args.j is None else cd_p_weil_gcd(d, args.j, args.p)
    payload = {"center_degree": d.center_degree, "deg": d.algebra_degree, "m": args.m, "j": args.j,
               "p": args.p, "balanced": d.balanced, "cd_p": value}
    try:
        payload["p_incompressible"] = is_p_incompressible(d.center_degree, d.algebra_degree,
                                                          args.m if args.j is None else d.algebra_degree,
                                                          d.balanced, args.p)
    except InputError:
        payload["p_incompressible"] = None
    _emit(args, payload, f"cd_{args.p} = {value}")
    return 0


def cmd_rank_variety(args) -> int:
    rep = ModularRep.from_json(_load_json(args.rep))
    V = rank_variety(rep)
    _emit(args, V.to_json(), str(V))
    return 0


def cmd_modular_lower_bound(args) -> int:
    res = ed_lower_bound_modular(args.n, p=args.p, q=args.q, seed=args.seed)
    _emit(args, res.to_json(), res.statement)
    return 0 if res.certified else 2


def cmd_family(args) -> int:
    if args.schilling == args.brauer:
        raise InputError("choose exactly one of --schilling and --brauer")
    if args.schilling:
        if args.l is None:
            raise InputError("--l is required with --schilling")
        fam = schilling_family(args.l)
    else:
        if args.primes is None:
            raise InputError("--primes is required with --brauer")
        fam = brauer_family(_int_list(args.primes), cap=args.cap)
    G = fam.group
    text = (f"{G.name}: order {G.order}; character of degree {fam.character.degree} "
            f"over {fam.field}")
    _emit(args, fam.to_json(), text)
    return 0


# parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized steps")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="group order cap")
    common.add_argument("--budget", type=int, default=DEFAULT_RHO_BUDGET,
                        help="Pollard rho iteration budget")

    parser = argparse.ArgumentParser(prog="edrep", description="Essential dimension of representations")
    parser.add_argument("--version", action="version", version=f"edrep {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", parents=[common], help="construct a group")
    p.add_argument("kind", choices=("quaternion-semidirect", "schilling", "product"))
    p.add_argument("inputs", nargs="*", help="group JSON files (product)")
    p.add_argument("--p", type=int)
    p.add_argument("--s", type=int)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("char-table", parents=[common], help="character table of a group")
    p.add_argument("group")
    p.set_defaults(func=cmd_char_table)

    p = sub.add_parser("schur-index", parents=[common], help="Schur index of an irreducible character")
    p.add_argument("char")
    p.add_argument("--field", required=True, help="field JSON file or Q")
    p.add_argument("--hint", type=int)
    p.set_defaults(func=cmd_schur_index)

    p = sub.add_parser("brauer-independence", parents=[common], help="norm / two-squares certificate")
    p.add_argument("--primes", required=True)
    p.set_defaults(func=cmd_brauer_independence)

    p = sub.add_parser("ed", parents=[common], help="essential dimension report")
    p.add_argument("--group", required=True)
    p.add_argument("--char", required=True)
    p.add_argument("--field", required=True, help="field JSON file or Q")
    p.add_argument("--primes", default="2")
    p.add_argument("--hint", action="append", help="INDEX=VALUE Schur index hint (repeatable)")
    p.set_defaults(func=cmd_ed)

    p = sub.add_parser("cd-weil", parents=[common], help="canonical p-dimension of a Weil transfer")
    p.add_argument("--center-degree", type=int, required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--j", type=int, help="use m = gcd(j, deg) instead of --m")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--balanced", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_cd_weil)

    p = sub.add_parser("rank-variety", parents=[common], help="rank variety of a (Z/p)^2 representation")
    p.add_argument("rep")
    p.set_defaults(func=cmd_rank_variety)

    p = sub.add_parser("modular-lower-bound", parents=[common], help="certified ed >= n in characteristic 2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--p", type=int, default=2)
    p.set_defaults(func=cmd_modular_lower_bound)

    p = sub.add_parser("family", parents=[common], help="emit a named family (group, character, field)")
    p.add_argument("--schilling", action="store_true")
    p.add_argument("--brauer", action="store_true")
    p.add_argument("--l", type=int)
    p.add_argument("--primes")
    p.set_defaults(func=cmd_family)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cap < 1 or args.budget < 1:
            raise InputError("caps must be positive")
        return args.func(args)
    except CertificationError as exc:
        print(dump({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        return 2
    except EdrepError as exc:
        print(dump({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
