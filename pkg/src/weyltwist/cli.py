"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 cap refusal.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

from . import d4lab
from .classify import ClassificationReport, enumerate_I_theta, verify_classification
from .golden import diff_itheta, load_golden
from .rootsys import RootSystemError, RootSystemSpec, build_root_system, weyl_group_order
from .twist import (
    AutomorphismError,
    compute_M_theta,
    dimension_formula,
    rank_one_minus_wtheta,
    resolve_automorphism,
    twisted_classes,
)
from .weyl import DEFAULT_CAP, CapExceeded, length, longest_element, reduced_word, simple_reflection

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
MAX_WORD = 64


class UsageError(Exception):
    pass


def _fmt_set(s) -> str:
    return "{" + ",".join(map(str, s)) + "}" if s else "∅"


def _setup(args):
    if args.type is None or args.rank is None:
        raise UsageError("--type and --rank are required")
    spec = RootSystemSpec(args.type, args.rank)
    rs = build_root_system(spec)
    theta = resolve_automorphism(rs, getattr(args, "auto", "id") or "id")
    return rs, theta


def _mtheta_rows(report: ClassificationReport):
    rs, theta = report.rs, report.theta
    rows = []
    for rec in sorted(report.mtheta, key=lambda r: (-r.length, r.I_m)):
        m = rec.element
        rank_term = rank_one_minus_wtheta(rs, m, theta)
        rows.append(
            {
                "matrix": [list(r) for r in m.matrix],
                "length": rec.length,
                "rank_term": rank_term,
                "dimension_formula": rec.length + rank_term,
                "I_m": list(rec.I_m),
                "reduced_word": list(reduced_word(rs, m)) if rec.length <= MAX_WORD else None,
            }
        )
    return rows


def report_to_dict(report: ClassificationReport) -> dict:
    flags = report.lemma_flags()
    return {
        "type": report.rs.spec.family,
        "rank": report.rs.rank,
        "automorphism": list(report.theta.perm),
        "weyl_order": report.weyl_order,
        "num_twisted_classes": report.num_twisted_classes,
        "mtheta": _mtheta_rows(report),
        "itheta": [list(s) for s in report.itheta],
        "checks": {
            "psi_injective": report.psi_injective,
            "theorem_holds": report.theorem_holds,
            "lemma_m0": flags["lemma_m0"],
            "corollary_involution": flags["corollary_involution"],
            "lemma_le_m": flags["lemma_le_m"],
            "im_has_properties": flags["im_has_properties"],
        },
    }


def _emit(args, obj, text: str, tsv: str | None = None):
    if args.format == "json":
        out = json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    elif args.format == "tsv":
        if tsv is None:
            raise UsageError(f"tsv output is not available for {args.command}")
        out = tsv
    else:
        out = text
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def cmd_roots(args):
    rs, _ = _setup(args)
    obj = {
        "type": rs.spec.family,
        "rank": rs.rank,
        "cartan": [list(r) for r in rs.cartan],
        "symmetrizer": list(rs.symmetrizer),
        "positive_roots": [list(r) for r in rs.positive_roots],
    }
    lines = [f"{rs}: {len(rs.positive_roots)} positive roots"]
    lines += [f"{k + 1}\t{' '.join(map(str, r))}\theight {sum(r)}" for k, r in enumerate(rs.positive_roots)]
    tsv = "index\tcoords\theight\n" + "".join(
        f"{k + 1}\t{','.join(map(str, r))}\t{sum(r)}\n" for k, r in enumerate(rs.positive_roots)
    )
    _emit(args, obj, "\n".join(lines) + "\n", tsv)
    return EXIT_OK


def cmd_weyl_order(args):
    rs, _ = _setup(args)
    predicted = weyl_group_order(rs.spec.family, rs.rank)
    obj = {"type": rs.spec.family, "rank": rs.rank, "predicted_order": predicted}
    text = f"|W({rs})| = {predicted}\n"
    if args.enumerate:
        from .weyl import enumerate_weyl

        obj["enumerated_order"] = len(enumerate_weyl(rs, args.cap))
        text += f"enumerated: {obj['enumerated_order']}\n"
    _emit(args, obj, text, f"predicted\tenumerated\n{predicted}\t{obj.get('enumerated_order', '')}\n")
    return EXIT_OK


def cmd_classes(args):
    from .weyl import enumerate_weyl

    rs, theta = _setup(args)
    group = enumerate_weyl(rs, args.cap)
    part = twisted_classes(rs, theta, group)
    classes = [
        {
            "size": int(part.sizes[c]),
            "max_length": int(part.max_length[c]),
            "n_at_max": int(part.n_at_max[c]),
        }
        for c in range(part.num_classes)
    ]
    obj = {
        "type": rs.spec.family,
        "rank": rs.rank,
        "automorphism": list(theta.perm),
        "weyl_order": len(group),
        "num_twisted_classes": part.num_classes,
        "classes": classes,
    }
    lines = [f"{rs} theta={list(theta.perm)}: {part.num_classes} twisted classes, |W| = {len(group)}"]
    lines += [f"class {k}: size {c['size']}, max length {c['max_length']} (x{c['n_at_max']})" for k, c in enumerate(classes)]
    tsv = "class\tsize\tmax_length\tn_at_max\n" + "".join(
        f"{k}\t{c['size']}\t{c['max_length']}\t{c['n_at_max']}\n" for k, c in enumerate(classes)
    )
    _emit(args, obj, "\n".join(lines) + "\n", tsv)
    return EXIT_OK


def _mtheta_tsv(rows) -> str:
    buf = io.StringIO()
    buf.write("length\trank_term\tdimension_formula\tI_m\tword\n")
    for r in rows:
        word = ",".join(map(str, r["reduced_word"])) if r["reduced_word"] is not None else ""
        buf.write(f"{r['length']}\t{r['rank_term']}\t{r['dimension_formula']}\t{','.join(map(str, r['I_m']))}\t{word}\n")
    return buf.getvalue()


def cmd_mtheta(args):
    from .weyl import enumerate_weyl

    rs, theta = _setup(args)
    report = verify_classification(rs, theta, enumerate_weyl(rs, args.cap))
    obj = report_to_dict(report)
    lines = [f"{rs} theta={list(theta.perm)}: |M_theta| = {len(obj['mtheta'])}"]
    for r in obj["mtheta"]:
        lines.append(
            f"  l={r['length']} rk={r['rank_term']} dim={r['dimension_formula']} "
            f"I_m={_fmt_set(r['I_m'])} word={r['reduced_word']}"
        )
    _emit(args, obj, "\n".join(lines) + "\n", _mtheta_tsv(obj["mtheta"]))
    return EXIT_OK


def cmd_itheta(args):
    rs, theta = _setup(args)
    itheta = enumerate_I_theta(rs, theta)
    obj = {"type": rs.spec.family, "rank": rs.rank, "automorphism": list(theta.perm), "itheta": [list(s) for s in itheta]}
    text = "{" + ", ".join(_fmt_set(s) for s in itheta) + "}\n"
    tsv = "I\n" + "".join(",".join(map(str, s)) + "\n" for s in itheta)
    _emit(args, obj, text, tsv)
    return EXIT_OK


def _d4_checks() -> dict[str, bool]:
    lab = d4lab.build_labeled_d4()
    table = d4lab.lambda_exponent_table(lab)
    analysis = d4lab.case_analysis(lab)
    orbits = set(d4lab.theta_orbits_on_positive(lab))
    return {
        "orbits": orbits == {(1, 3, 4), (5, 6, 7), (8, 9, 10), (2,), (11,), (12,)},
        "strongly_orthogonal": all(d4lab.strongly_orthogonal_check(lab, q) for q in d4lab.STRONGLY_ORTHOGONAL_QUADS),
        "w0_factorizations": d4lab.w0_factorizations(lab),
        "lambda_table": set(table.values()) == {(1, 0), (0, 1), (1, 3), (2, 3), (1, 1), (1, 2)},
        "case_analysis": analysis.ok
        and (analysis.w0_length, analysis.w0_rank_term, analysis.w0s2_length, analysis.w0s2_rank_term) == (12, 4, 11, 3),
    }


def _verify_case(rs, theta, cap, golden=None) -> tuple[bool, dict]:
    from .weyl import enumerate_weyl

    report = verify_classification(rs, theta, enumerate_weyl(rs, cap))
    obj = report_to_dict(report)
    obj["partition_checks"] = report.partition_checks
    obj["ok"] = report.ok
    ok = report.ok
    if golden is not None:
        missing, extra = diff_itheta(golden.itheta, report.itheta)
        obj["golden"] = {
            "case": golden.name,
            "missing": [list(s) for s in missing],
            "unexpected": [list(s) for s in extra],
            "match": not missing and not extra,
        }
        ok = ok and not missing and not extra
        obj["ok"] = ok
    return ok, obj


def cmd_verify(args):
    results = []
    all_ok = True
    if args.all_paper_tables:
        version, cases = load_golden()
        for case in cases:
            rs = build_root_system(RootSystemSpec(case.family, case.rank))
            theta = resolve_automorphism(rs, case.auto)
            ok, obj = _verify_case(rs, theta, args.cap, case)
            all_ok &= ok
            results.append(obj)
        d4 = _d4_checks()
        all_ok &= all(d4.values())
        payload = {"golden_version": version, "cases": results, "d4": d4, "ok": all_ok}
    else:
        rs, theta = _setup(args)
        ok, obj = _verify_case(rs, theta, args.cap)
        all_ok = ok
        results.append(obj)
        payload = {"cases": results, "ok": all_ok}

    lines = []
    for obj in results:
        tag = "PASS" if obj["ok"] else "FAIL"
        name = f"{obj['type']}{obj['rank']} theta={obj['automorphism']}"
        line = f"{tag}  {name}  I_theta={{{', '.join(_fmt_set(s) for s in obj['itheta'])}}}"
        if "golden" in obj and not obj["golden"]["match"]:
            g = obj["golden"]
            line += f"  golden {g['case']}: missing {g['missing']}, unexpected {g['unexpected']}"
        lines.append(line)
    if "d4" in payload:
        for k, v in payload["d4"].items():
            lines.append(f"{'PASS' if v else 'FAIL'}  d4 {k}")
    lines.append("OK" if all_ok else "VERIFICATION FAILED")
    tsv = "case\tok\n" + "".join(f"{o['type']}{o['rank']}:{','.join(map(str, o['automorphism']))}\t{o['ok']}\n" for o in results)
    _emit(args, payload, "\n".join(lines) + "\n", tsv)
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_d4(args):
    lab = d4lab.build_labeled_d4()
    a = d4lab.case_analysis(lab)
    table = d4lab.lambda_exponent_table(lab)
    checks = _d4_checks()
    obj = {
        "labels": {str(k): list(v) for k, v in lab.labels.items()},
        "theta_orbits": [list(o) for o in d4lab.theta_orbits_on_positive(lab)],
        "strongly_orthogonal": {
            ",".join(map(str, q)): d4lab.strongly_orthogonal_check(lab, q) for q in d4lab.STRONGLY_ORTHOGONAL_QUADS
        },
        "w0_factorizations": d4lab.w0_factorizations(lab),
        "lambda_exponents": {str(k): list(v) for k, v in table.items()},
        "fixed_dim": a.fixed_dim,
        "w0": {"length": a.w0_length, "rank_term": a.w0_rank_term, "dimension_formula": a.w0_formula_value},
        "w0s2": {
            "length": a.w0s2_length,
            "rank_term": a.w0s2_rank_term,
            "dimension_formula": a.w0s2_length + a.w0s2_rank_term,
        },
        "case1": {"n": a.case1_n, "dim_stabilizer": a.case1_dim_stabilizer, "dim_class": a.case1_dim_class},
        "four_subset_divisors": {",".join(map(str, k)): v for k, v in a.subset_divisors.items()},
        "case2": {"max_n": a.case2_max_n, "dim_lower_bound": a.case2_dim_lower_bound},
        "unchecked_claims": a.unchecked_claims,
        "checks": checks,
    }
    lines = [
        "D4 with triality (alpha_1 -> alpha_3 -> alpha_4 -> alpha_1)",
        f"theta-orbits on positive roots: {obj['theta_orbits']}",
        f"strongly orthogonal quadruples: {obj['strongly_orthogonal']}",
        f"w0 = s1s3s4s12 = s5s6s7s11 = s8s9s10s2 = -1: {obj['w0_factorizations']}",
        f"exponents (lambda_1, lambda_2): {table}",
        f"dim h^theta = {a.fixed_dim}",
        f"l(w0) + rk(1 - w0 theta) = {a.w0_length} + {a.w0_rank_term} = {a.w0_formula_value}",
        f"l(w0 s2) + rk(1 - w0 s2 theta) = {a.w0s2_length} + {a.w0s2_rank_term} = {a.w0s2_length + a.w0s2_rank_term}",
        f"case 1: n = {a.case1_n}, dim g_h = {a.case1_dim_stabilizer}, dim C_h = {d4lab.DIM_G} - {a.case1_dim_stabilizer} = {a.case1_dim_class}",
        f"all 15 four-element subsets unimodular: {a.all_subsets_unimodular}",
        f"case 2: n <= {a.case2_max_n}, dim C_h >= {a.case2_dim_lower_bound}",
    ]
    lines += [f"note: {c}" for c in a.unchecked_claims]
    lines.append("OK" if all(checks.values()) else "FAILED")
    tsv = "check\tok\n" + "".join(f"{k}\t{v}\n" for k, v in checks.items())
    _emit(args, obj, "\n".join(lines) + "\n", tsv)
    return EXIT_OK if all(checks.values()) else EXIT_FAIL


def _parse_word(rs, text: str):
    w = None
    letters = []
    for tok in filter(None, (t.strip() for t in text.replace(" ", ",").split(","))):
        if tok == "w0":
            g = longest_element(rs)
        else:
            try:
                i = int(tok)
            except ValueError:
                raise UsageError(f"bad word token {tok!r}; use integers or 'w0'") from None
            g = simple_reflection(rs, i)
        letters.append(tok)
        w = g if w is None else w * g
    if w is None:
        from .weyl import WeylElement

        w = WeylElement.identity(rs.rank)
    return w, letters


def cmd_dimension(args):
    rs, theta = _setup(args)
    w, letters = _parse_word(rs, args.word or "")
    ln = length(rs, w)
    rk = rank_one_minus_wtheta(rs, w, theta)
    obj = {
        "type": rs.spec.family,
        "rank": rs.rank,
        "automorphism": list(theta.perm),
        "word": letters,
        "matrix": [list(r) for r in w.matrix],
        "length": ln,
        "rank_term": rk,
        "dimension_formula": dimension_formula(rs, theta, w),
    }
    text = f"l = {ln}, rk(1 - w theta) = {rk}, l + rk = {ln + rk}\n"
    _emit(args, obj, text, f"length\trank_term\tdimension_formula\n{ln}\t{rk}\t{ln + rk}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="root system family A-G")
    common.add_argument("--rank", type=int)
    common.add_argument(
        "--auto",
        default="id",
        help="id, delta0, flip, triality, triality-inv, or perm=i1:j1,i2:j2,...",
    )
    common.add_argument("--format", choices=("json", "tsv", "text"), default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum Weyl group order to enumerate")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="weyltwist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("roots", parents=[common], help="list positive roots").set_defaults(func=cmd_roots)
    p = sub.add_parser("weyl-order", parents=[common], help="Weyl group order")
    p.add_argument("--enumerate", action="store_true", help="also count by enumeration")
    p.set_defaults(func=cmd_weyl_order)
    sub.add_parser("classes", parents=[common], help="twisted class statistics").set_defaults(func=cmd_classes)
    sub.add_parser("mtheta", parents=[common], help="unique maximal-length class representatives").set_defaults(
        func=cmd_mtheta
    )
    sub.add_parser("itheta", parents=[common], help="subsets with Properties (1) and (2)").set_defaults(
        func=cmd_itheta
    )
    p = sub.add_parser("verify", parents=[common], help="check lemmas, theorem and golden tables")
    p.add_argument("--all-paper-tables", action="store_true", help="run every shipped golden case and the D4 checks")
    p.set_defaults(func=cmd_verify)
    sub.add_parser("d4", parents=[common], help="D4 triality lattice computations").set_defaults(func=cmd_d4)
    p = sub.add_parser("dimension", parents=[common], help="l(w) + rk(1 - w theta)")
    p.add_argument("--word", help="comma-separated simple indices; the token w0 inserts the longest element")
    p.set_defaults(func=cmd_dimension)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"weyltwist: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, RootSystemError, AutomorphismError) as exc:
        print(f"weyltwist: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
