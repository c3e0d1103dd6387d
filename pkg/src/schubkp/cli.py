"""
Command-line front end.

Every command prints one JSON document (or a plain table with ``--table``)
and exits with 0 on success, 1 when a verification fails, 2 on usage or
parse errors and 3 when a resource ceiling refuses the job.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import serialize
from .errors import ResourceLimitError, VerificationError
from .kpfiltration import iterated_monk_filtration, monk_filtration, t_w_module, tensor_kp_verify
from .perm import Permutation, last_descent, longest, parse_perm
from .polynomial import Partition
from .schubert import (
    expand_in_schubert, monk_product, schubert, schur_positivity_check,
    structure_constants,
)
from .suite import verify_suite
from .weightmod import coinvariant_hom_dim, kp_module, tensor

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _perm(text: str) -> Permutation:
    try:
        return parse_perm(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rank(args, *perms: Permutation, nu: int = 0) -> int:
    if args.n is not None:
        return args.n
    return max([1, nu + 1] + [max(last_descent(w), 1) for w in perms])


def _perm_json(w: Permutation) -> list[int]:
    return list(w.images) or [1]


def _expansion_table(expansion: dict) -> list[str]:
    return [f"{c:>6}  S_{w}" for w, c in sorted(expansion.items())] or ["     0"]


def cmd_schubert(args):
    n = _rank(args, args.perm)
    poly = schubert(args.perm, n)
    return serialize.poly_to_json(poly), [repr(poly)], True


def cmd_expand(args):
    data = json.loads(Path(args.poly_file).read_text())
    poly = serialize.poly_from_json(data)
    n = args.n if args.n is not None else max(poly.nvars, 1)
    expansion = expand_in_schubert(poly, n)
    return serialize.expansion_to_json(expansion), _expansion_table(expansion), True


def cmd_monk(args):
    n = _rank(args, args.perm, nu=args.nu)
    expansion = monk_product(args.perm, args.nu, n)
    return serialize.expansion_to_json(expansion), _expansion_table(expansion), True


def cmd_product(args):
    n = _rank(args, args.perm, args.perm2)
    expansion = structure_constants(args.perm, args.perm2, n)
    return serialize.expansion_to_json(expansion), _expansion_table(expansion), True


def cmd_kp_char(args):
    n = _rank(args, args.perm)
    module = kp_module(args.perm, n, check=False)
    ch = module.character()
    ok = ch == schubert(args.perm, n)
    out = {"perm": _perm_json(args.perm), "n": n, "dim": module.dim,
           "character": serialize.poly_to_json(ch), "matches_schubert": ok}
    if args.module:
        out["module"] = serialize.module_to_json(module)
    return out, [f"dim {module.dim}", f"ch = {ch!r}", f"matches Schubert polynomial: {ok}"], ok


def cmd_monk_filtration(args):
    n = _rank(args, args.perm, nu=args.nu)
    cert = monk_filtration(args.perm, args.nu, n, strict=False)
    table = [f"{'label':>14}  {'pair':>7}  {'dim F_i':>7}  checks"]
    for s in cert.steps:
        table.append(f"{str(s.label):>14}  {str(s.pair):>7}  {s.dim:>7}  "
                     + ("ok" if all(s.checks.values()) else ",".join(k for k, v in s.checks.items() if not v)))
    return serialize.certificate_to_json(cert), table, cert.passed


def cmd_iterated_filtration(args):
    n = _rank(args, args.perm, nu=max(args.nus, default=0))
    cert = iterated_monk_filtration(args.perm, args.nus, n, strict=False)
    table = [f"{str(s.label):>14}  dim F_i {s.dim}" for s in cert.steps]
    return serialize.certificate_to_json(cert), table, cert.passed


def cmd_verify_cert(args):
    data = json.loads(Path(args.cert).read_text())
    problems = serialize.verify_certificate(data)
    return {"valid": not problems, "problems": problems}, problems or ["certificate valid"], not problems


def cmd_tensor_verify(args):
    n = _rank(args, args.perm, args.perm2)
    if args.perm.size > n or args.perm2.size > n:
        raise UsageError("tensor-verify needs both permutations in S_n")
    report = tensor_kp_verify(args.perm, args.perm2, n, strict=False)
    out = {
        "w": _perm_json(report.w), "v": _perm_json(report.v), "n": n,
        "expansion": serialize.expansion_to_json(report.coefficients),
        "hom_dims": [{"perm": _perm_json(u), "dim": d} for u, d in sorted(report.hom_dims.items())],
        "character_ok": report.character_ok, "hom_ok": report.hom_ok,
    }
    table = _expansion_table(report.coefficients) + [
        f"character check: {report.character_ok}", f"Hom check: {report.hom_ok}"]
    return out, table, report.passed


def cmd_t_w(args):
    n = _rank(args, args.perm)
    if args.perm.size > n:
        raise UsageError(f"{args.perm} is not in S_{n}")
    res = t_w_module(args.perm, n, strict=False)
    out = {
        "perm": _perm_json(args.perm), "n": n,
        "dim_T": res.T.dim, "dim_S": res.S.dim, "dim_N": res.N.dim,
        "multiplicities": serialize.expansion_to_json(res.multiplicities),
        "cokernel": serialize.expansion_to_json(res.cokernel_expansion),
        "checks": dict(sorted(res.checks.items())),
    }
    table = [f"dim T_w = {res.T.dim}, dim S_w = {res.S.dim}, dim N = {res.N.dim}", "n_wu:"]
    table += _expansion_table(res.multiplicities)
    table += [f"{k}: {v}" for k, v in sorted(res.checks.items())]
    return out, table, res.passed


def cmd_hom_dim(args):
    n = _rank(args, args.perm, args.perm2, args.target)
    for w in (args.perm, args.perm2, args.target):
        if w.size > n:
            raise UsageError(f"{w} is not in S_{n}")
    w0 = longest(n)
    rho = tuple(range(n - 1, -1, -1))
    module = tensor(kp_module(args.perm, n), kp_module(args.perm2, n), kp_module(w0 * args.target, n))
    dim = coinvariant_hom_dim(module, rho)
    coeff = structure_constants(args.perm, args.perm2, n).get(args.target, 0)
    out = {"u": _perm_json(args.perm), "v": _perm_json(args.perm2), "w": _perm_json(args.target),
           "n": n, "hom_dim": dim, "structure_constant": coeff, "equal": dim == coeff}
    return out, [f"dim Hom = {dim}", f"structure constant = {coeff}"], dim == coeff


def cmd_schur_positivity(args):
    n = _rank(args, args.perm)
    lam = Partition(args.partition)
    try:
        expansion = schur_positivity_check(lam, args.perm, n)
    except VerificationError as exc:
        return {"positive": False, "error": str(exc)}, [str(exc)], False
    out = {"partition": list(lam.parts), "perm": _perm_json(args.perm), "n": n,
           "expansion": serialize.expansion_to_json(expansion), "positive": True}
    return out, _expansion_table(expansion), True


def cmd_verify_suite(args):
    n = args.n if args.n is not None else 3
    start = time.perf_counter()
    results = verify_suite(n)
    out = {
        "n": n,
        "criteria": [
            {"number": r.number, "name": r.name, "passed": r.passed, "checks": r.checked,
             "seconds": round(r.seconds, 3), "failures": r.failures}
            for r in results
        ],
        "passed": all(r.passed for r in results),
        "seconds": round(time.perf_counter() - start, 3),
    }
    return out, [r.line() for r in results], out["passed"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schubkp", description=__doc__.strip().splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="rank (number of variables)")
    common.add_argument("--out", help="write the JSON result here instead of standard output")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="table", action="store_false", default=False, help="JSON output (default)")
    fmt.add_argument("--table", dest="table", action="store_true", help="human-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(fn=fn)
        return p

    add("schubert", cmd_schubert, "Schubert polynomial").add_argument("--perm", type=_perm, required=True)
    add("expand", cmd_expand, "expand a polynomial in Schubert polynomials").add_argument(
        "--poly-file", required=True)
    p = add("monk", cmd_monk, "Monk's rule")
    p.add_argument("--perm", type=_perm, required=True)
    p.add_argument("--nu", type=int, required=True)
    p = add("product", cmd_product, "structure constants of a product")
    p.add_argument("--perm", type=_perm, required=True)
    p.add_argument("--perm2", type=_perm, required=True)
    p = add("kp-char", cmd_kp_char, "build a KP module and its character")
    p.add_argument("--perm", type=_perm, required=True)
    p.add_argument("--module", action="store_true", help="include weights and action matrices")
    p = add("monk-filtration", cmd_monk_filtration, "certificate for S_w x S_{s_nu}")
    p.add_argument("--perm", type=_perm, required=True)
    p.add_argument("--nu", type=int, required=True)
    p = add("iterated-filtration", cmd_iterated_filtration, "certificate for S_v x S_{s_nu1} x ...")
    p.add_argument("--perm", type=_perm, required=True)
    p.add_argument("--nus", type=_int_list, required=True)
    add("verify-cert", cmd_verify_cert, "re-check a certificate file").add_argument("--cert", required=True)
    p = add("tensor-verify", cmd_tensor_verify, "check S_w x S_v by characters and Hom dimensions")
    p.add_argument("--perm", type=_perm, required=True)
    p.add_argument("--perm2", type=_perm, required=True)
    add("t-w", cmd_t_w, "the module T_w and its cokernel").add_argument("--perm", type=_perm, required=True)
    p = add("hom-dim", cmd_hom_dim, "dim Hom(S_u x S_v x S_{w0 w}, K_rho) against c_uv^w")
    p.add_argument("--perm", type=_perm, required=True)
    p.add_argument("--perm2", type=_perm, required=True)
    p.add_argument("--target", type=_perm, required=True)
    p = add("schur-positivity", cmd_schur_positivity, "Schur function of a Schubert alphabet")
    p.add_argument("--partition", type=_int_list, required=True)
    p.add_argument("--perm", type=_perm, required=True)
    add("verify-suite", cmd_verify_suite, "run every acceptance sweep at rank n")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, table, ok = args.fn(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (UsageError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = "\n".join(table) if args.table else serialize.dumps(result)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    if not ok:
        print("verification failed", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
