"""Command-line front end: parsing, dispatch, JSON/text output, and the
reproduction selftest."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import abelianize, centralizer, matrices, reducible, selftest, words, zclass
from .matrices import IntMatrix

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class _Output:
    def __init__(self, as_json: bool, out: Optional[str]):
        self.as_json = as_json
        self.out = out
        self.lines: list[str] = []

    def emit(self, payload: dict, text: str):
        body = json.dumps(payload) if self.as_json else text
        if self.out:
            with open(self.out, "w") as fh:
                fh.write(body + "\n")
        else:
            print(body)


def _default_bound(fallback: int) -> int:
    env = os.environ.get("PALINDROMA_BOUND")
    if env is None:
        return fallback
    try:
        return int(env)
    except ValueError:
        raise matrices.MatrixError(f"PALINDROMA_BOUND={env!r} is not an integer")


def _load_endomap(spec_text: str, rank: int) -> words.EndoMap:
    """A file path, or inline images separated by `;`."""
    if os.path.exists(spec_text):
        with open(spec_text) as fh:
            return words.parse_endomap(fh.read(), rank)
    return words.parse_endomap(spec_text.replace(";", "\n"), rank)


def _mat_rows(m: IntMatrix) -> list[list[int]]:
    return [list(row) for row in m.entries]


def _invariants_payload(inv: Optional[reducible.SimInvariants]) -> Optional[dict]:
    if inv is None:
        return None
    return {
        "e": inv.e,
        "tau": inv.tau,
        "delta": inv.delta,
        "m": inv.m,
        "A0": _mat_rows(inv.a0),
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="palindroma",
        description="Exact-arithmetic decision procedures for palindromic "
        "automorphism matrices.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--out", metavar="FILE", help="write output to FILE")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("psi", help="exponent-sum matrix of an endomorphism")
    p.add_argument("endomap")
    p.add_argument("--rank", type=int, default=3)

    p = sub.add_parser("lift", help="palindromic lift of a parity-subgroup matrix")
    p.add_argument("matrix")

    p = sub.add_parser("member", help="parity-subgroup membership of a matrix")
    p.add_argument("matrix")

    p = sub.add_parser("palindrome", help="is a word a palindrome")
    p.add_argument("word")
    p.add_argument("--rank", type=int, default=3)

    p = sub.add_parser("apply", help="apply an endomorphism to a word")
    p.add_argument("endomap")
    p.add_argument("word")
    p.add_argument("--rank", type=int, default=3)

    p = sub.add_parser("compose", help="compose two endomorphisms (left action)")
    p.add_argument("endomap_f")
    p.add_argument("endomap_g")
    p.add_argument("--rank", type=int, default=3)

    p = sub.add_parser("order", help="element order in GL_n(Z)")
    p.add_argument("matrix")
    p.add_argument("--power-bound", type=int, default=None)

    p = sub.add_parser("charpoly", help="characteristic polynomial")
    p.add_argument("matrix")

    p = sub.add_parser("eigen", help="eigenvalue classification (3x3)")
    p.add_argument("matrix")

    p = sub.add_parser("reducible", help="permutation-block reducibility")
    p.add_argument("matrix")

    p = sub.add_parser("sim1", help="coupled vs decoupled conjugacy criterion")
    p.add_argument("matrix")
    p.add_argument("--orientation", choices=["auto", "upper", "lower"], default="auto")

    p = sub.add_parser("conjsys", help="integer intertwiner lattice of R A = B R")
    p.add_argument("matrix_a")
    p.add_argument("matrix_b")
    p.add_argument("--bound", type=int, default=None)

    p = sub.add_parser("residual", help="G A - B G")
    p.add_argument("matrix_a")
    p.add_argument("matrix_b")
    p.add_argument("matrix_g")

    p = sub.add_parser("commutant", help="integer commutant lattice")
    p.add_argument("matrix")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--rank", action="store_true", help="rank only")
    group.add_argument("--basis", action="store_true", help="basis only")

    p = sub.add_parser("centralizer", help="bounded centralizer in the parity subgroup")
    p.add_argument("matrix")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--census", action="store_true", help="tally element orders")
    p.add_argument("--report-dir", metavar="DIR",
                   help="write census.csv and census.png to DIR")

    p = sub.add_parser("family", help="audit a displayed centralizer family")
    p.add_argument("id", choices=[
        "sign_diag", "A12_form", "tau12_form", "tau123_form", "P3_A", "P3_B",
    ])
    p.add_argument("--params", default="", help="comma-separated integers")
    p.add_argument("--bound", type=int, default=None)

    p = sub.add_parser("zclass", help="z-class witnesses and audits")
    zsub = p.add_subparsers(dest="zcommand", required=True)

    zw = zsub.add_parser("witness", help="conjugator or distinguisher for a pair")
    zw.add_argument("--g1", required=True)
    zw.add_argument("--g2", required=True)
    zw.add_argument("--bound", type=int, default=None)

    zp = zsub.add_parser("p3", help="parametric two-family audit")
    zp.add_argument("--n", type=int, required=True)
    zp.add_argument("--l", type=int, required=True)
    zp.add_argument("--m", type=int, required=True)
    zp.add_argument("--bound", type=int, default=None)
    zp.add_argument("--report-dir", metavar="DIR",
                    help="write audit.csv and audit_ranks.png to DIR")

    ze = zsub.add_parser("embed", help="block embed a 3x3 matrix into rank N")
    ze.add_argument("matrix")
    ze.add_argument("--dim", type=int, required=True)

    p = sub.add_parser("selftest", help="run the full reproduction suite")
    p.add_argument("--seed", type=int, default=None)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else 0
    out = _Output(args.json, args.out)
    try:
        return _dispatch(args, out)
    except (words.WordError, matrices.MatrixError, reducible.ReducibleError,
            centralizer.CentralizerError, zclass.ZClassError,
            abelianize.MembershipError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def _dispatch(args: argparse.Namespace, out: _Output) -> int:
    cmd = args.command

    if cmd == "psi":
        f = _load_endomap(args.endomap, args.rank)
        m = abelianize.psi(f)
        out.emit({"matrix": _mat_rows(m)}, matrices.format_matrix(m))
        return EXIT_OK

    if cmd == "lift":
        m = matrices.parse_matrix(args.matrix)
        f = abelianize.lift(m)
        out.emit(
            {"images": [words.format_word(w) for w in f.images]},
            words.format_endomap(f),
        )
        return EXIT_OK

    if cmd == "member":
        m = matrices.parse_matrix(args.matrix)
        report = abelianize.membership_report(m)
        payload = {"member": report.member}
        if report.obstruction:
            payload["obstruction"] = report.obstruction
        text = "member" if report.member else f"not a member: {report.obstruction}"
        out.emit(payload, text)
        return EXIT_OK

    if cmd == "palindrome":
        w = words.parse_word(args.word, args.rank)
        value = words.is_palindrome(w)
        out.emit({"palindrome": value}, "palindrome" if value else "not a palindrome")
        return EXIT_OK

    if cmd == "apply":
        f = _load_endomap(args.endomap, args.rank)
        w = words.parse_word(args.word, args.rank)
        result = words.apply(f, w)
        out.emit({"word": words.format_word(result)}, words.format_word(result))
        return EXIT_OK

    if cmd == "compose":
        f = _load_endomap(args.endomap_f, args.rank)
        g = _load_endomap(args.endomap_g, args.rank)
        h = words.compose(f, g)
        out.emit(
            {"images": [words.format_word(w) for w in h.images]},
            words.format_endomap(h),
        )
        return EXIT_OK

    if cmd == "order":
        m = matrices.parse_matrix(args.matrix)
        res = matrices.order(m, args.power_bound)
        payload = {"finite": res.finite}
        if res.finite:
            payload["order"] = res.value
        out.emit(payload, str(res))
        return EXIT_OK

    if cmd == "charpoly":
        m = matrices.parse_matrix(args.matrix)
        chi = matrices.char_poly(m)
        payload = {"coeffs": list(chi.coeffs)}
        if chi.tau is not None:
            payload["tau"] = chi.tau
            payload["delta"] = chi.delta
        out.emit(payload, str(chi))
        return EXIT_OK

    if cmd == "eigen":
        m = matrices.parse_matrix(args.matrix)
        cls = matrices.eigen_classify(m)
        eigs = []
        for e in cls.eigenvalues:
            entry = {"kind": e.kind, "multiplicity": e.multiplicity}
            if e.value is not None:
                entry["value"] = e.value
            if e.discriminant is not None:
                entry["discriminant"] = e.discriminant
            eigs.append(entry)
        payload = {"char": list(cls.char.coeffs), "eigenvalues": eigs,
                   "all_unit": cls.all_unit}
        lines = [str(cls.char)] + [
            f"  {e['kind']}"
            + (f" value={e['value']}" if "value" in e else "")
            + (f" discriminant={e['discriminant']}" if "discriminant" in e else "")
            + f" multiplicity={e['multiplicity']}"
            for e in eigs
        ]
        out.emit(payload, "\n".join(lines))
        return EXIT_OK

    if cmd == "reducible":
        m = matrices.parse_matrix(args.matrix)
        is_red, patterns = reducible.zero_pattern_reducible(m)
        form = reducible.reduce_by_permutation(m)
        payload = {"reducible": is_red, "patterns": patterns}
        text = "reducible: " + ", ".join(patterns) if is_red else "irreducible"
        if form is not None:
            payload["orientation"] = form.orientation
            payload["e"] = form.e
            payload["A2"] = _mat_rows(form.a2)
            payload["coupling"] = list(form.coupling)
            payload["permutation"] = _mat_rows(form.permutation)
            text += (f"\norientation {form.orientation}, e={form.e}, "
                     f"A2={matrices.format_matrix(form.a2)}, "
                     f"coupling={form.coupling}")
        out.emit(payload, text)
        return EXIT_OK

    if cmd == "sim1":
        m = matrices.parse_matrix(args.matrix)
        orientation = {
            "auto": None,
            "upper": reducible.UPPER_LEFT,
            "lower": reducible.LOWER_RIGHT,
        }[args.orientation]
        form = reducible.reduce_by_permutation(m, orientation)
        if form is None:
            out.emit(
                {"verdict": reducible.INAPPLICABLE,
                 "obstruction": "matrix is not reducible"},
                "Inapplicable: matrix is not reducible",
            )
            return EXIT_OK
        verdict = reducible.decide_sim1(form)
        payload = {"verdict": verdict.kind}
        if verdict.invariants is not None:
            payload["m"] = verdict.invariants.m
        if verdict.residue is not None:
            payload["residue"] = list(verdict.residue)
        payload["invariants"] = _invariants_payload(verdict.invariants)
        payload["witness"] = _mat_rows(verdict.witness) if verdict.witness else None
        payload["obstruction"] = verdict.reason
        text = verdict.kind
        if verdict.witness is not None:
            text += f"\nwitness: {matrices.format_matrix(verdict.witness)}"
        if verdict.reason:
            text += f"\n{verdict.reason}"
        out.emit(payload, text)
        return EXIT_OK

    if cmd == "conjsys":
        a = matrices.parse_matrix(args.matrix_a)
        b = matrices.parse_matrix(args.matrix_b)
        bound = args.bound if args.bound is not None else _default_bound(5)
        system = reducible.solve_conjugation_system(a, b)
        points = reducible.enumerate_intertwiners(system, bound, hat_only=True)
        payload = {
            "rank": system.rank,
            "basis": [_mat_rows(x) for x in system.basis],
            "bound": bound,
            "unimodular_in_subgroup": [_mat_rows(x) for x in points],
        }
        text = (f"lattice rank {system.rank}; {len(points)} bounded parity-subgroup "
                f"intertwiners (bound {bound})")
        for x in system.basis:
            text += "\n" + matrices.format_matrix(x)
        out.emit(payload, text)
        return EXIT_OK

    if cmd == "residual":
        a = matrices.parse_matrix(args.matrix_a)
        b = matrices.parse_matrix(args.matrix_b)
        g = matrices.parse_matrix(args.matrix_g)
        res = reducible.conjugation_residual(a, b, g)
        payload = {"residual": _mat_rows(res), "zero": res == matrices.zero(a.n)}
        out.emit(payload, matrices.format_matrix(res))
        return EXIT_OK

    if cmd == "commutant":
        m = matrices.parse_matrix(args.matrix)
        lattice = centralizer.commutant(m)
        payload = {"rank": lattice.rank,
                   "basis": [_mat_rows(x) for x in lattice.basis]}
        if args.rank:
            out.emit({"rank": lattice.rank}, str(lattice.rank))
        elif args.basis:
            out.emit({"basis": payload["basis"]},
                     "\n".join(matrices.format_matrix(x) for x in lattice.basis))
        else:
            text = f"rank {lattice.rank}\n" + "\n".join(
                matrices.format_matrix(x) for x in lattice.basis
            )
            out.emit(payload, text)
        return EXIT_OK

    if cmd == "centralizer":
        m = matrices.parse_matrix(args.matrix)
        bound = args.bound if args.bound is not None else _default_bound(2)
        if args.census or args.report_dir:
            census = centralizer.order_census(m, bound)
            payload = {
                "bound": bound,
                "counts": {str(k): v for k, v in sorted(census.counts.items())},
                "infinite": census.infinite,
                "order2_witnesses": [_mat_rows(x) for x in census.order2_witnesses],
                "order4_witnesses": [_mat_rows(x) for x in census.order4_witnesses],
            }
            text = "\n".join(
                [f"order {k}: {v}" for k, v in sorted(census.counts.items())]
                + [f"infinite: {census.infinite}"]
            )
            if args.report_dir:
                from . import report

                paths = report.write_census_report(census, args.report_dir)
                payload["report_files"] = paths
                text += "\nreport: " + ", ".join(paths)
            out.emit(payload, text)
        else:
            elements = centralizer.centralizer_enumerate(m, bound)
            payload = {"bound": bound, "count": len(elements),
                       "elements": [_mat_rows(x) for x in elements]}
            text = f"{len(elements)} elements (bound {bound})\n" + "\n".join(
                matrices.format_matrix(x) for x in elements
            )
            out.emit(payload, text)
        return EXIT_OK

    if cmd == "family":
        params = tuple(int(t) for t in args.params.split(",") if t.strip() != "")
        bound = args.bound if args.bound is not None else _default_bound(2)
        rep = centralizer.verify_family(args.id, params, bound)
        payload = {
            "family": rep.family,
            "bound": rep.bound,
            "checked_instances": rep.checked_instances,
            "instances_commute": rep.instances_commute,
            "instance_failures": [_mat_rows(x) for x in rep.instance_failures[:10]],
            "checked_elements": rep.checked_elements,
            "shape_covers": rep.shape_covers,
            "shape_outliers": [_mat_rows(x) for x in rep.shape_outliers[:10]],
        }
        text = (
            f"family {rep.family}: {rep.checked_instances} instances checked, "
            f"{len(rep.instance_failures)} fail to commute; "
            f"{rep.checked_elements} bounded centralizer elements, "
            f"{len(rep.shape_outliers)} outside the displayed shape"
        )
        out.emit(payload, text)
        return EXIT_OK

    if cmd == "zclass":
        return _dispatch_zclass(args, out)

    if cmd == "selftest":
        results = selftest.run_all(args.seed)
        payload = {
            "results": [
                {"name": r.name, "status": r.status, "detail": r.detail}
                for r in results
            ]
        }
        text = "\n".join(f"[{r.status}] {r.name}: {r.detail}" for r in results)
        out.emit(payload, text)
        if any(r.status == selftest.FAIL for r in results):
            return EXIT_INTERNAL
        return EXIT_OK

    raise AssertionError(f"unhandled command {cmd!r}")


def _dispatch_zclass(args: argparse.Namespace, out: _Output) -> int:
    if args.zcommand == "witness":
        bound = args.bound if args.bound is not None else _default_bound(2)
        w = zclass.generator_zclass_witness(args.g1, args.g2, bound)
        payload = {
            "kind": w.kind,
            "conjugator": _mat_rows(w.conjugator) if w.conjugator else None,
            "distinguishers": [
                {"invariant": name, "left": str(x), "right": str(y)}
                for name, x, y in w.distinguishers
            ],
        }
        if w.kind == "ConjugatorFound":
            text = f"conjugator: {matrices.format_matrix(w.conjugator)}"
        elif w.kind == "Distinguisher":
            text = "\n".join(
                f"distinguisher {name}: {x} vs {y}" for name, x, y in w.distinguishers
            )
        else:
            text = f"inconclusive at bound {w.bound}"
        out.emit(payload, text)
        return EXIT_OK

    if args.zcommand == "p3":
        bound = args.bound if args.bound is not None else _default_bound(2)
        audit = zclass.p3_audit(args.n, args.l, args.m, bound)
        payload = {
            "params": {"n": audit.n, "l": audit.l, "m": audit.m, "bound": audit.bound},
            "commutant_ranks": [audit.rank_a, audit.rank_b],
            "eigen_all_unit": audit.eigen_all_unit,
            "eigen_checked": audit.eigen_checked,
            "erratum": {
                "residual": _mat_rows(audit.erratum_residual),
                "nonzero": audit.erratum_nonzero,
                "displayed_instance_failures": audit.displayed_instance_failures,
            },
            "pair_equations": list(audit.equations),
            "pair_t": audit.pair_t,
            "hat_conjugators_found": audit.hat_conjugators_found,
            "gl_conjugators_found": audit.gl_conjugators_found,
        }
        lines = [
            f"commutant ranks: {audit.rank_a} vs {audit.rank_b}",
            f"bounded first-family centralizer: {audit.eigen_checked} elements, "
            f"all eigenvalues unit: {audit.eigen_all_unit}",
            ("ERRATUM: displayed second-family member does not commute; residual "
             + matrices.format_matrix(audit.erratum_residual))
            if audit.erratum_nonzero else "displayed member commutes",
            f"intertwiner equations for the pair (t={audit.pair_t}):",
        ]
        lines += [f"  {eq}" for eq in audit.equations]
        lines.append(
            f"bounded conjugators (bound {audit.bound}): "
            f"{audit.hat_conjugators_found} in the parity subgroup, "
            f"{audit.gl_conjugators_found} in GL_3(Z)"
        )
        text = "\n".join(lines)
        if args.report_dir:
            from . import report

            paths = report.write_audit_report([audit], args.report_dir)
            payload["report_files"] = paths
            text += "\nreport: " + ", ".join(paths)
        out.emit(payload, text)
        return EXIT_OK

    if args.zcommand == "embed":
        m = matrices.parse_matrix(args.matrix)
        big = zclass.block_embed(m, args.dim)
        out.emit({"matrix": _mat_rows(big)}, matrices.format_matrix(big))
        return EXIT_OK

    raise AssertionError(f"unhandled zclass command {args.zcommand!r}")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
