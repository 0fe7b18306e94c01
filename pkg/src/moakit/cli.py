"""Command line front end, one verb per invocation.

Verbs: field, code-analyze, code-dual, moa-verify, moa-analyze,
moa-from-code, moa-trace-dual, irmoa-from-code, fixtures-selftest.

Exit codes: 0 success, 1 input or parse errors, 2 a requested verdict
failed (for example `moa-verify --t 3` on a strength-2 array).  Reports go
to standard output, diagnostics to standard error.  Identical invocations
produce byte-identical reports: no timestamps, fixed subset order, sorted
JSON keys.
"""

from __future__ import annotations

import argparse
import json
import sys

from .blockcode import DEFAULT_ENUM_CAP, dual_code, min_block_distance, singleton_report
from .bridge import CoordMap, code_to_array, irredundancy_from_code, trace_dual
from .errors import NotUniformError, ParseError, StrengthError, ToolkitError
from .fields import find_self_dual_basis, parse_field_descriptor, self_dual_basis_exists
from .fileio import format_code, format_moa, parse_code_file, parse_moa_file
from .moa import index_table, max_strength, singleton_analysis
from .selftest import run_selftest

TRACE_PRINT_CAP = 64


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ToolkitError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


class _Parser(argparse.ArgumentParser):
    # input errors exit 1; argparse's default of 2 is reserved for verdicts
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="moakit",
        description="mixed orthogonal arrays and error-block codes over GF(q)",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def verb(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=fn)
        p.add_argument("--format", choices=("text", "json"), default="text",
                       help="report format (default text)")
        return p

    p = verb("field", _cmd_field, "describe a field: modulus, Gram, self-dual basis")
    p.add_argument("descriptor",
                   help="GF(p^r), GF(p^r, m), or GF(p^r, m; c_0 ... c_m)")
    p.add_argument("--cap", type=int, default=None,
                   help="self-dual basis search cap")

    p = verb("code-analyze", _cmd_code_analyze,
             "distances, Singleton bound, MDS verdict of a .code file")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP)

    p = verb("code-dual", _cmd_code_dual, "dual code as a .code file")
    p.add_argument("file")

    p = verb("moa-verify", _cmd_moa_verify,
             "verify strength t, or report the maximum strength")
    p.add_argument("file")
    p.add_argument("--t", type=int, default=None, help="strength to test")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP)

    p = verb("moa-analyze", _cmd_moa_analyze,
             "full analysis: indices, bounds, MDS, irredundancy")
    p.add_argument("file")
    p.add_argument("--t", type=int, default=None,
                   help="strength to analyze at (default: the maximum)")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP)

    p = verb("moa-from-code", _cmd_moa_from_code,
             "preimage array of a code, with a strength certificate")
    p.add_argument("file")
    p.add_argument("--basis", choices=("self-dual", "poly"), default="self-dual")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP)

    p = verb("moa-trace-dual", _cmd_moa_trace_dual,
             "trace dual of a linear array as a .moa file")
    p.add_argument("file")
    p.add_argument("--basis", choices=("self-dual", "poly"), default="self-dual")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP)

    p = verb("irmoa-from-code", _cmd_irmoa_from_code,
             "irredundancy construction for a code and its dual")
    p.add_argument("file")
    p.add_argument("--basis", choices=("self-dual", "poly"), default="self-dual")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP)

    p = verb("fixtures-selftest", _cmd_selftest,
             "re-derive every frozen value for the shipped fixtures")
    p.add_argument("--fixtures-dir", default=None,
                   help="directory with the fixture files (default: packaged)")

    return parser


def _emit(args, lines, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _yes(v: bool) -> str:
    return "yes" if v else "no"


# -- field ----------------------------------------------------------------


def _cmd_field(args) -> int:
    F = parse_field_descriptor(args.descriptor)
    base = F.base
    sd_exists = self_dual_basis_exists(base, F.m)
    sd = None
    if sd_exists:
        sd = find_self_dual_basis(F) if args.cap is None \
            else find_self_dual_basis(F, cap=args.cap)
    gram = [[int(x) for x in row] for row in F.gram]
    traces = [F.trace(x) for x in range(F.order)] if F.order <= TRACE_PRINT_CAP else None

    lines = [
        f"field {F!r}",
        f"base q {base.q} (p {base.p}, r {base.r}), extension degree {F.m}, "
        f"order {F.order}",
        "modulus coefficients " + " ".join(str(c) for c in F.modulus)
        + " (constant term first)",
        "polynomial basis " + " ".join(str(b) for b in F.basis),
        "gram " + "; ".join(" ".join(str(x) for x in row) for row in gram),
    ]
    if traces is not None:
        lines.append("traces " + " ".join(str(t) for t in traces))
    if sd is not None:
        lines.append("self-dual basis " + " ".join(str(b) for b in sd.elements))
    else:
        reason = "none found" if sd_exists else "none exists (q odd, degree even)"
        lines.append(f"self-dual basis: {reason}")

    payload = {
        "descriptor": args.descriptor,
        "p": base.p,
        "r": base.r,
        "q": base.q,
        "m": F.m,
        "order": F.order,
        "modulus": list(F.modulus),
        "poly_basis": [int(b) for b in F.basis],
        "gram": gram,
        "traces": traces,
        "self_dual_exists": sd_exists,
        "self_dual_basis": None if sd is None else [int(b) for b in sd.elements],
    }
    _emit(args, lines, payload)
    return 0


# -- codes ----------------------------------------------------------------


def _load_code(args):
    code, info = parse_code_file(args.file)
    for note in info.notes:
        print(f"note: {note}", file=sys.stderr)
    return code, info


def _cmd_code_analyze(args) -> int:
    code, info = _load_code(args)
    d = min_block_distance(code, cap=args.cap)
    dual = dual_code(code)
    # empty dual: distance exceeds every block count, clamp to s + 1
    s = code.partition.num_blocks
    dd = min_block_distance(dual, cap=args.cap) if dual.k else s + 1
    rep = singleton_report(code, d)
    lines = [
        f"code [{code.n}, {code.k}] over GF({code.field.q}), "
        f"type {code.partition.type_string()}",
        f"block distance {d}",
        f"dual dimension {dual.k}, dual block distance {dd}",
        f"singleton bound: n - k = {code.n - code.k} >= {rep.bound_rhs}, "
        f"slack {rep.slack}",
        f"verdict MDS: {_yes(rep.is_mds)}",
        f"distance sum {d} + {dd} <= n + 2 = {code.n + 2}: "
        f"{_yes(d + dd <= code.n + 2)}",
    ]
    payload = {
        "file": args.file,
        "q": code.field.q,
        "n": code.n,
        "k": code.k,
        "type_string": code.partition.type_string(),
        "block_distance": d,
        "dual_dimension": dual.k,
        "dual_block_distance": dd,
        "singleton_rhs": rep.bound_rhs,
        "singleton_slack": rep.slack,
        "is_mds": rep.is_mds,
        "load_notes": list(info.notes),
    }
    _emit(args, lines, payload)
    return 0


def _cmd_code_dual(args) -> int:
    code, info = _load_code(args)
    dual = dual_code(code)
    text = format_code(dual, comment=f"dual of {args.file}")
    payload = {
        "file": args.file,
        "q": dual.field.q,
        "type": list(dual.partition.sizes),
        "gen_rows": [[int(x) for x in row] for row in dual.gen],
    }
    if args.format == "json":
        _emit(args, [], payload)
    else:
        sys.stdout.write(text)
    return 0


# -- arrays ---------------------------------------------------------------


def _load_moa(args):
    arr, info = parse_moa_file(args.file)
    for note in info.notes:
        print(f"note: {note}", file=sys.stderr)
    return arr, info


def _witness_payload(e: NotUniformError) -> dict:
    (ta, ca), (tb, cb) = e.witness
    return {
        "columns": [c + 1 for c in e.columns],
        "tuple_a": list(ta),
        "count_a": ca,
        "tuple_b": list(tb),
        "count_b": cb,
    }


def _cmd_moa_verify(args) -> int:
    arr, info = _load_moa(args)
    head = (
        f"array {arr.M} x {arr.s} over GF({arr.base.q}), "
        "degrees " + " ".join(str(m) for m in arr.degrees)
    )
    payload = {
        "file": args.file,
        "q": arr.base.q,
        "rows": arr.M,
        "columns": arr.s,
        "degrees": list(arr.degrees),
        "load_notes": list(info.notes),
    }
    if args.t is None:
        ms = max_strength(arr, cap=args.cap)
        payload.update({"t": None, "max_strength": ms, "verdict": True,
                        "witness": None})
        _emit(args, [head, f"maximum strength {ms}"], payload)
        return 0
    witness = None
    try:
        index_table(arr, args.t, cap=args.cap)
    except NotUniformError as e:
        witness = e
    ok = witness is None
    lines = [head, f"strength >= {args.t}: {_yes(ok)}"]
    if witness is not None:
        lines.append(f"witness: {witness}")
    payload.update({
        "t": args.t,
        "max_strength": None,
        "verdict": ok,
        "witness": None if witness is None else _witness_payload(witness),
    })
    _emit(args, lines, payload)
    return 0 if ok else 2


def _render_report(rep) -> list[str]:
    lines = [
        rep.parameters,
        f"rows {rep.rows}, columns {rep.columns}, base q {rep.q}, "
        "degrees " + " ".join(str(m) for m in rep.degrees),
        f"strength {rep.strength} (maximum {rep.max_strength})",
        "index by column subset:",
    ]
    for cols, v in rep.indices:
        shown = " ".join(str(c + 1) for c in cols)
        lines.append(f"  cols {shown}: {v}")
    lines += [
        f"minimum index {rep.lambda_min}",
        f"minimum Hamming distance {rep.min_hamming_distance}",
        f"singleton sandwich: {rep.bound_lower} <= {rep.rows} <= "
        f"{rep.bound_upper} <= {rep.bound_loose}",
        "singleton defect "
        + ("undefined" if rep.singleton_defect is None else str(rep.singleton_defect)),
        f"verdict MDS: {_yes(rep.is_mds)}",
        f"verdict almost-MDS: {_yes(rep.is_almost_mds)}",
        f"verdict irredundant at t={rep.strength}: {_yes(rep.is_irredundant)}",
        f"necessary condition 2t <= s: {_yes(rep.two_t_le_s)}",
        f"linearity: {rep.linearity}",
    ]
    ext = rep.extremal
    if ext.applies:
        lines.append(
            f"extremal criterion: applies, MDS {_yes(ext.is_mds)}, "
            f"minimum index {ext.lambda_min}"
            + (f" ({ext.note})" if ext.note else "")
        )
    else:
        lines.append(f"extremal criterion: does not apply ({ext.note})")
    if rep.notes:
        lines.append("notes: " + "; ".join(rep.notes))
    return lines


def _cmd_moa_analyze(args) -> int:
    arr, info = _load_moa(args)
    t = args.t
    if t is None:
        t = max_strength(arr, cap=args.cap)
        if t == 0:
            lines = [
                f"array {arr.M} x {arr.s} over GF({arr.base.q})",
                "maximum strength 0: not an orthogonal array at any "
                "positive strength",
            ]
            payload = {
                "file": args.file,
                "q": arr.base.q,
                "rows": arr.M,
                "columns": arr.s,
                "max_strength": 0,
                "load_notes": list(info.notes),
            }
            _emit(args, lines, payload)
            return 2
    try:
        rep = singleton_analysis(arr, t, cap=args.cap)
    except StrengthError as e:
        witness = e.__cause__
        lines = [f"strength >= {t}: no"]
        payload = {
            "file": args.file,
            "t": t,
            "verdict": False,
            "witness": None,
        }
        if isinstance(witness, NotUniformError):
            lines.append(f"witness: {witness}")
            payload["witness"] = _witness_payload(witness)
        _emit(args, lines, payload)
        return 2
    payload = rep.to_dict()
    payload["file"] = args.file
    payload["load_notes"] = list(info.notes)
    _emit(args, _render_report(rep), payload)
    return 0


# -- conversions ----------------------------------------------------------


def _cmd_moa_from_code(args) -> int:
    code, info = _load_code(args)
    ctx = CoordMap.build(code.field, code.partition.sizes, basis=args.basis)
    arr, cert = code_to_array(ctx, code, cap=args.cap)
    comment_lines = [
        f"preimage of {args.file}",
        f"strength {cert.strength}, basis policy {cert.basis_policy}",
    ]
    for cols, v in cert.indices:
        shown = " ".join(str(c + 1) for c in cols)
        comment_lines.append(f"index cols {shown}: {v}")
    payload = {
        "file": args.file,
        "q": arr.base.q,
        "cols": list(arr.degrees),
        "rows": [[int(x) for x in row] for row in arr.rows],
        "strength": cert.strength,
        "basis_policy": cert.basis_policy,
        "indices": [
            {"cols": [c + 1 for c in cols], "value": v}
            for cols, v in cert.indices
        ],
    }
    if args.format == "json":
        _emit(args, [], payload)
    else:
        sys.stdout.write(format_moa(arr, comment="\n".join(comment_lines)))
    return 0


def _cmd_moa_trace_dual(args) -> int:
    arr, info = _load_moa(args)
    ctx = CoordMap.build(arr.base, arr.degrees, basis=args.basis)
    td = trace_dual(ctx, arr, cap=args.cap)
    comment = (
        f"trace dual of {args.file}\n"
        f"{td.M} rows, basis policy {ctx.policy}"
    )
    payload = {
        "file": args.file,
        "q": td.base.q,
        "cols": list(td.degrees),
        "rows": [[int(x) for x in row] for row in td.rows],
        "basis_policy": ctx.policy,
    }
    if args.format == "json":
        _emit(args, [], payload)
    else:
        sys.stdout.write(format_moa(td, comment=comment))
    return 0


def _cmd_irmoa_from_code(args) -> int:
    code, info = _load_code(args)
    ctx = CoordMap.build(code.field, code.partition.sizes, basis=args.basis)
    rep, primal, dual_arr = irredundancy_from_code(ctx, code, cap=args.cap)
    dual_line = (
        "verdict dual irredundant (dual d >= d): "
        + ("not evaluated (needs self-dual bases)"
           if rep.dual_irredundant is None else _yes(rep.dual_irredundant))
    )
    both_line = (
        "verdict both irredundant (d = dual d): "
        + ("not evaluated" if rep.both_irredundant is None
           else _yes(rep.both_irredundant))
    )
    lines = [
        f"code [{code.n}, {code.k}] over GF({code.field.q}), "
        f"type {code.partition.type_string()}",
        f"block distance {rep.d_primal}, dual block distance {rep.d_dual}",
        f"primal array: {rep.primal_parameters}",
        f"verdict primal irredundant (d >= dual d): {_yes(rep.primal_irredundant)}",
        f"dual array: {rep.dual_parameters}",
        dual_line,
        both_line,
        f"basis policy {rep.basis_policy}",
        "primal rows:",
    ]
    lines += ["  " + " ".join(str(int(x)) for x in row) for row in primal.rows]
    payload = {
        "file": args.file,
        "q": code.field.q,
        "type_string": code.partition.type_string(),
        "d_primal": rep.d_primal,
        "d_dual": rep.d_dual,
        "t_primal": rep.t_primal,
        "t_dual": rep.t_dual,
        "primal_irredundant": rep.primal_irredundant,
        "dual_irredundant": rep.dual_irredundant,
        "both_irredundant": rep.both_irredundant,
        "basis_policy": rep.basis_policy,
        "primal_parameters": rep.primal_parameters,
        "dual_parameters": rep.dual_parameters,
        "primal_rows": [[int(x) for x in row] for row in primal.rows],
        "notes": list(rep.notes),
    }
    _emit(args, lines, payload)
    return 0 if rep.primal_irredundant else 2


# -- selftest -------------------------------------------------------------


def _cmd_selftest(args) -> int:
    results = run_selftest(args.fixtures_dir)
    failures = sum(1 for r in results if not r.ok)
    lines = [
        f"{'ok  ' if r.ok else 'FAIL'} {r.name}: {r.detail}" for r in results
    ]
    lines.append(f"checks {len(results)}, failures {failures}")
    payload = {
        "checks": [
            {"name": r.name, "ok": r.ok, "detail": r.detail} for r in results
        ],
        "failures": failures,
    }
    _emit(args, lines, payload)
    return 0 if failures == 0 else 2


if __name__ == "__main__":
    sys.exit(main())
