"""Command-line front end.

Exit codes: 0 success, 1 a mathematical verification failed or the
requested object does not exist, 2 bad usage or unreadable input.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

import numpy as np

from . import design_core, fixtures, graph_factor, hr_arith, hr_family, iso_solver
from .algebra_core import OmegaVector, build_free, quotient, solve_coefficients, verify_h_type

EXAMPLES = ("omega1", "omega2", "omega3", "octonion8")
FACTORIZATION_EXAMPLES = {"kirkman8": fixtures.kirkman8, "steiner8": fixtures.steiner8}
REFERENCE_CONJUGATORS = {
    ("omega1", "omega3"): fixtures.B_OMEGA1_TO_OMEGA3,
    ("omega1", "omega2"): fixtures.B1_SWAP34,
}


class UsageError(Exception):
    pass


class Outcome:
    """Collected output of one command: text lines, a JSON payload and an exit status."""

    def __init__(self):
        self.lines: list[str] = []
        self.data: dict = {}
        self.status = 0

    def say(self, line: str = ""):
        self.lines.append(line)


def _pair(text: str, name: str) -> tuple[int, int]:
    try:
        a, b = (int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"{name} expects two comma-separated integers, got {text!r}")
    if a < 0 or b < 0:
        raise UsageError(f"{name} entries must be nonnegative")
    return a, b


def _matrix_text(M) -> str:
    M = np.asarray(M)
    width = max(len(str(int(v))) for v in M.flat)
    return "\n".join("[" + " ".join(str(int(v)).rjust(width) for v in row) + "]" for row in M)


def _grid(kind: str) -> list[str]:
    table = hr_arith.signature_table(kind)
    col = "t" if kind == "s" else "s"
    head = "n".ljust(4) + "".join(f"{col}={c}".rjust(5) for c in range(5))
    rows = [f"maximal {kind} by order (columns: {col})", head]
    for r, row in zip(range(1, 6), table):
        rows.append(str(2 ** r).ljust(4) + "".join(("-" if v is None else str(v)).rjust(5) for v in row))
    return rows


# rho -------------------------------------------------------------------------

def cmd_rho(args) -> Outcome:
    out = Outcome()
    did = False
    if args.n is not None:
        if args.n < 1 or args.n > hr_arith.MAX_ORDER:
            raise UsageError(f"n must be between 1 and {hr_arith.MAX_ORDER}")
        d = hr_arith.decompose(args.n)
        value = hr_arith.rho(args.n)
        out.say(str(value))
        out.data["rho"] = {"n": args.n, "value": value, "u": d.u, "alpha": d.alpha, "beta": d.beta}
        did = True
    for kind, flag in (("s", args.table1), ("t", args.table2)):
        if flag:
            out.lines += _grid(kind)
            out.data[f"table_{kind}"] = hr_arith.signature_table(kind)
            did = True
    try:
        if args.rho_t:
            r, t = args.rho_t
            v = hr_arith.wolfe_rho(r, t)
            out.say(f"rho_{t}(2^{r}) = {'-' if v is None else v}")
            out.data["rho_t"] = {"r": r, "t": t, "value": v}
            did = True
        if args.sigma:
            r, s = args.sigma
            v = hr_arith.wolfe_sigma(r, s)
            out.say(f"sigma_{s}(2^{r}) = {'-' if v is None else v}")
            out.data["sigma_s"] = {"r": r, "s": s, "value": v}
            did = True
        if args.tau is not None:
            v = hr_arith.tau(args.tau)
            out.say(f"tau(2^{args.tau}) = {v}")
            out.data["tau"] = {"r": args.tau, "value": v}
            did = True
    except ValueError as exc:
        raise UsageError(str(exc))
    if not did:
        raise UsageError("rho needs n or one of --table1, --table2, --rho-t, --sigma, --tau")
    return out


# algebra ---------------------------------------------------------------------

def _read_factorization(path: str) -> graph_factor.OneFactorization:
    if path in FACTORIZATION_EXAMPLES:
        return FACTORIZATION_EXAMPLES[path]()
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    try:
        if text.lstrip().startswith("["):
            return graph_factor.OneFactorization.from_json(text)
        return graph_factor.OneFactorization.from_text(text)
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"malformed factorization in {path}: {exc}")


def _algebra_from_factorization(k: int, s: int, t: int, sig_u, path: str, out: Outcome):
    fac = _read_factorization(path)
    if fac.order != 2 * k:
        raise UsageError(f"factorization is on {fac.order} vertices, expected {2 * k}")
    if s + t > len(fac.factors):
        raise UsageError("factorization has fewer factors than requested center directions")
    chosen = list(fac.factors[: s + t])
    if sig_u is None:
        u_signs = [1] * (2 * k) if t == 0 else [1] * k + [-1] * k
    else:
        p, q = sig_u
        if p + q != 2 * k:
            raise UsageError(f"--sig-u must sum to {2 * k}")
        u_signs = [1] * p + [-1] * q
    z_signs = {pair: -1 for f in chosen[s:] for pair in f.pairs}
    N = build_free(k, z_signs=z_signs, u_signs=u_signs)
    try:
        sols = solve_coefficients(chosen, N)
    except ValueError as exc:
        raise UsageError(str(exc))
    out.say(f"coefficient assignments found: {len(sols)}")
    if not sols:
        return None
    alpha = sols[0]
    return quotient(N, [OmegaVector(f, {p: alpha[p] for p in f.pairs}) for f in chosen])


def cmd_algebra(args) -> Outcome:
    out = Outcome()
    k = args.k
    if k < 1:
        raise UsageError("--k must be positive")
    n = 2 * k
    u, r = hr_arith.two_adic(n)
    s, t = _pair(args.sig_z, "--sig-z") if args.sig_z else (hr_arith.rho(n) - 1, 0)
    sig_u = _pair(args.sig_u, "--sig-u") if args.sig_u else None
    if s + t == 0:
        raise UsageError("the center must have positive dimension")
    if r > hr_arith.MAX_EXPONENT:
        raise UsageError("order too large")
    out.data["request"] = {"k": k, "sig_z": [s, t]}
    if not hr_arith.is_realizable(r, s, t):
        out.say(
            f"no pseudo H-type algebra with center signature ({s},{t}) exists on {n} generators "
            f"built from signed-permutation J-operators"
        )
        bound = hr_arith.max_signature_s(r, t)
        out.say(f"maximal s for t={t}: {'none' if bound is None else bound}")
        out.data["exists"] = False
        out.status = 1
        return out
    out.data["exists"] = True
    try:
        if args.factorization:
            alg = _algebra_from_factorization(k, s, t, sig_u, args.factorization, out)
            if alg is None:
                out.say("the chosen factors admit no anticommuting coefficient assignment")
                out.status = 1
                return out
        else:
            if sig_u is not None:
                raise UsageError("--sig-u is only used together with --factorization")
            if r > hr_family.MAX_EXPONENT:
                raise UsageError(f"construction supports orders with 2-adic part up to 2^{hr_family.MAX_EXPONENT}")
            fam = hr_family.family_for_signature(n, s, t)
            alg = hr_family.algebra_from_family(fam)
    except ValueError as exc:
        out.say(f"construction failed: {exc}")
        out.status = 1
        return out
    out.say(f"pseudo H-type algebra: dim h = {alg.dim_h}, sig h = {alg.sig_h}, dim z = {len(alg.omega_basis)}, sig z = {alg.sig_z}")
    for idx, w in enumerate(alg.omega_basis, start=1):
        out.say(f"w{idx} = {w}")
    report = verify_h_type(alg)
    out.lines += report.text().splitlines()
    out.data["algebra"] = alg.to_dict()
    out.data["checks"] = [{"name": c.name, "passed": c.passed, "witness": c.witness} for c in report.checks]
    if args.export:
        Path(args.export).write_text(alg.to_json())
        out.say(f"exported to {args.export}")
    out.status = 0 if report.passed else 1
    return out


# iso -------------------------------------------------------------------------

def _load_family(source: str) -> hr_family.HRFamily:
    if source in EXAMPLES:
        return hr_family.example_family(source)
    try:
        return hr_family.HRFamily.from_json(Path(source).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc}")
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed family file {source}: {exc}")


def cmd_iso(args) -> Outcome:
    out = Outcome()
    names = args.example or args.files
    if not names or len(names) != 2:
        raise UsageError("iso needs two families via --example or --files")
    fam1, fam2 = (_load_family(x) for x in names)
    if fam1.n != fam2.n or (fam1.s, fam1.t) != (fam2.s, fam2.t):
        raise UsageError("families differ in order or signature")
    B, matching = iso_solver.find_conjugator(fam1, fam2)
    out.data["families"] = list(names)
    if B is None:
        out.say("B = none")
        out.data["B"] = None
        out.status = 1
        return out
    out.say("B =")
    out.lines += _matrix_text(B).splitlines()
    out.say("matching: " + ", ".join(f"E{l + 1} -> E{m + 1}'" for l, m in enumerate(matching)))
    for l, m in enumerate(matching):
        ok = np.array_equal(fam2.members[m] @ B, B @ fam1.members[l])
        out.say(f"{'PASS' if ok else 'FAIL'} E{m + 1}' B = B E{l + 1}")
    ok = iso_solver.verify_conjugacy(B, fam1, fam2)
    cert = iso_solver.rank_deficiency_certificate(fam1, fam2, matching)
    out.say(f"conjugacy verified: {ok}")
    out.say(f"rank deficiency certificate: {'valid' if cert.valid else 'invalid'}")
    out.data.update(
        B=B.tolist(),
        matching=list(matching),
        verified=ok,
        certificate=cert.valid,
    )
    system = iso_solver.build_system(fam1, fam2, matching)
    sols = iso_solver.enumerate_signed_perm(system, cap=args.cap)
    out.say(f"signed-permutation solutions for this matching (up to {args.cap}): {len(sols)}")
    if args.all:
        for idx, S in enumerate(sols, start=1):
            out.say(f"solution {idx}:")
            out.lines += _matrix_text(S).splitlines()
    out.data["solutions"] = [S.tolist() for S in sols]
    ref = REFERENCE_CONJUGATORS.get(tuple(names)) if args.example else None
    if ref is not None:
        ref_ok = iso_solver.verify_conjugacy(ref, fam1, fam2)
        listed = any(np.array_equal(ref, S) for S in iso_solver.enumerate_signed_perm(
            iso_solver.build_system(fam1, fam2, iso_solver.conjugacy_matching(ref, fam1, fam2)), cap=10 ** 6))
        out.say("reference conjugator:")
        out.lines += _matrix_text(ref).splitlines()
        out.say(f"reference conjugator verifies: {ref_ok}; among enumerated solutions: {listed}")
        out.data["reference"] = {"B": ref.tolist(), "verified": ref_ok, "enumerated": listed}
        ok = ok and ref_ok and listed
    out.status = 0 if ok and cert.valid else 1
    return out


# design ----------------------------------------------------------------------

def _check_design(D, weights, rng: random.Random, trials: int) -> tuple[bool, bool]:
    symbolic = design_core.verify_od(D, weights)
    numeric = all(
        design_core.numeric_od(D, weights, [rng.randint(-9, 9) for _ in range(D.var_count)]) for _ in range(trials)
    )
    return symbolic, numeric


def cmd_design(args) -> Outcome:
    out = Outcome()
    n = args.n
    if n < 1:
        raise UsageError("--n must be positive")
    rng = random.Random(args.seed)
    if args.amicable is not None:
        return _amicable(n, args.amicable, args, rng, out)
    if n % 2:
        fam = None
        D = design_core.DesignMatrix(np.eye(n, dtype=np.int64), 1)
    else:
        u, r = hr_arith.two_adic(n)
        if r > hr_family.MAX_EXPONENT:
            raise UsageError(f"orders with 2-adic part above 2^{hr_family.MAX_EXPONENT} are not supported")
        fam = hr_family.build_positive(r, hr_arith.rho(n) - 1, multiplier=u)
        D = design_core.from_family(fam, include_identity=True)
    out.say(f"orthogonal design of order {n} on {D.var_count} variables (maximum {design_core.max_variables(n)})")
    out.lines += D.format().splitlines()
    out.data["design"] = json.loads(D.to_json())
    if args.verify:
        sym, num = _check_design(D, [1] * D.var_count, rng, args.trials)
        out.say(f"{'PASS' if sym else 'FAIL'} symbolic D D^T = (x1^2 + ... + x{D.var_count}^2) I")
        out.say(f"{'PASS' if num else 'FAIL'} numeric check at {args.trials} random points")
        out.data.update(symbolic=sym, numeric=num)
        out.status = 0 if sym and num else 1
    return out


def _amicable(n: int, t: int, args, rng: random.Random, out: Outcome) -> Outcome:
    if n % 2 or n < 2:
        raise UsageError("amicable construction needs an even order")
    if t < 1:
        raise UsageError("--amicable expects t >= 1")
    s_vars = design_core.max_amicable_s(n, t)
    if s_vars is None:
        out.say(f"no amicable eta-orthogonal pair of order {n} with {t} variables in Y")
        out.data["exists"] = False
        out.status = 1
        return out
    fam = hr_family.family_for_signature(n, s_vars - 1, t)
    X, Y = design_core.amicable_from_family(fam)
    out.say(f"amicable pair of order {n}: X on {X.var_count} variables (maximum), Y on {Y.var_count}")
    out.say("X =")
    out.lines += X.format("x").splitlines()
    out.say("Y =")
    out.lines += Y.format("y").splitlines()
    out.data.update(exists=True, X=json.loads(X.to_json()), Y=json.loads(Y.to_json()))
    if args.verify:
        ox = _check_design(X, [1] * X.var_count, rng, args.trials)
        oy = _check_design(Y, [1] * Y.var_count, rng, args.trials)
        am = design_core.verify_amicable(X, Y)
        am_num = all(
            design_core.numeric_amicable(
                X, Y, [rng.randint(-9, 9) for _ in range(X.var_count)], [rng.randint(-9, 9) for _ in range(Y.var_count)]
            )
            for _ in range(args.trials)
        )
        eta = hr_family.metric_for(fam)
        eta_rep = design_core.verify_eta(fam, eta)
        checks = {
            "X orthogonal": all(ox),
            "Y orthogonal": all(oy),
            "X Y^T = Y X^T": am and am_num,
            "eta isometries": eta_rep.passed,
            "derived family": hr_family.verify_family(design_core.derived_family(X, Y)).passed,
        }
        for name, ok in checks.items():
            out.say(f"{'PASS' if ok else 'FAIL'} {name}")
        out.data["checks"] = checks
        out.status = 0 if all(checks.values()) else 1
    return out


# factorize -------------------------------------------------------------------

def _factorization(args) -> graph_factor.OneFactorization:
    if args.input:
        return _read_factorization(args.input)
    if args.k is None:
        raise UsageError("factorize needs --k or --input")
    k = args.k
    if k < 1:
        raise UsageError("--k must be positive")
    if args.style == "round-robin":
        return graph_factor.round_robin(k)
    if args.style == "xor":
        if (2 * k) & (2 * k - 1):
            raise UsageError("the xor style needs 2k to be a power of two")
        return graph_factor.xor_factorization((2 * k).bit_length() - 1)
    if k != 4:
        raise UsageError(f"the {args.style} style is only available for k = 4")
    return FACTORIZATION_EXAMPLES[args.style + "8"]()


def cmd_factorize(args) -> Outcome:
    out = Outcome()
    fac = _factorization(args)
    valid = graph_factor.validate_factorization(fac)
    out.lines += [f"{idx:>2}: {f}" for idx, f in enumerate(fac.factors, start=1)]
    out.say(f"valid 1-factorization: {valid}")
    out.data["factors"] = json.loads(fac.to_json())
    out.data["valid"] = valid
    if args.classify:
        i, j = args.classify
        m = len(fac.factors)
        if not (1 <= i <= m and 1 <= j <= m) or i == j:
            raise UsageError(f"--classify needs two distinct factor indices in 1..{m}")
        ct = graph_factor.union_cycles(fac.factors[i - 1], fac.factors[j - 1])
        out.say(f"factors {i},{j}: {ct}")
        out.data["classify"] = {"i": i, "j": j, "cycles": list(ct.lengths)}
    if args.classify_all:
        table = graph_factor.classify_all(fac)
        for (i, j), ct in table.items():
            out.say(f"factors {i},{j}: {ct}")
        square = all(all(x == 4 for x in ct.lengths) for ct in table.values())
        out.say(f"all pairs square: {square}")
        out.data["classify_all"] = [{"i": i, "j": j, "cycles": list(ct.lengths)} for (i, j), ct in table.items()]
        out.data["all_square"] = square
    out.status = 0 if valid else 1
    return out


# driver ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", help="write the output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="htype", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rho", parents=[common], help="Hurwitz-Radon numbers and signature tables")
    p.add_argument("n", nargs="?", type=int)
    p.add_argument("--table1", action="store_true", help="maximal s for given t")
    p.add_argument("--table2", action="store_true", help="maximal t for given s")
    p.add_argument("--rho-t", nargs=2, type=int, metavar=("R", "T"))
    p.add_argument("--sigma", nargs=2, type=int, metavar=("R", "S"))
    p.add_argument("--tau", type=int, metavar="R")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("algebra", parents=[common], help="build and verify a pseudo H-type algebra")
    p.add_argument("--k", type=int, required=True, help="half the number of generators")
    p.add_argument("--sig-z", help="center signature s,t")
    p.add_argument("--sig-u", help="first-layer signature p,q (with --factorization)")
    p.add_argument("--factorization", help="1-factorization file, or kirkman8 / steiner8")
    p.add_argument("--export", help="write the algebra as JSON to this path")
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("iso", parents=[common], help="signed-permutation conjugator between two families")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--example", nargs=2, choices=EXAMPLES, metavar="NAME")
    g.add_argument("--files", nargs=2, metavar="FILE")
    p.add_argument("--all", action="store_true", help="print every enumerated solution")
    p.add_argument("--cap", type=int, default=16, help="enumeration limit")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("design", parents=[common], help="orthogonal and amicable designs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--amicable", type=int, metavar="T", help="build an amicable pair with T variables in Y")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=64)
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("factorize", parents=[common], help="1-factorizations of K_2k")
    p.add_argument("--k", type=int)
    p.add_argument("--style", choices=("round-robin", "xor", "steiner", "kirkman"), default="round-robin")
    p.add_argument("--input", help="factorization file")
    p.add_argument("--classify", nargs=2, type=int, metavar=("I", "J"))
    p.add_argument("--classify-all", action="store_true")
    p.set_defaults(func=cmd_factorize)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        outcome = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"htype {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        text = json.dumps({"command": args.command, "status": outcome.status, **outcome.data}, indent=1, sort_keys=True)
    else:
        text = "\n".join(outcome.lines)
    text += "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return outcome.status


if __name__ == "__main__":
    sys.exit(main())
