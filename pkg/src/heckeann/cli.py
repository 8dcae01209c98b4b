"""
Command-line front end.

    heckeann basis   --n 3 --ring laurent
    heckeann element --n 4 --s 1,2,3/4 --t 1,2,3/4 --kind x_sharp --ring q_rat:v=1
    heckeann ann     --n 4 --lambda 2,2 --ring gfp:p=2,v=1 --method both
    heckeann tensor  --m 2 --n 4 --op F1 --weight 3,1 --ring q_rat:v=1
    heckeann verify  --suite all --max-n 3
    heckeann example --which seven --format text

JSON goes to stdout with sorted keys. Exit codes: 0 success, 1 a check
failed, 2 bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .combinat import Partition, parse_parts, parse_tableau
from .hecke import (MurphyIndex, hecke_algebra, involution, murphy_basis,
                    murphy_change_of_basis, murphy_element, t_inverse)
from .modrep import (annihilator_closed, annihilator_kernel,
                     counterexample_report, is_semisimple, semisimple_kernel_rank,
                     verify_annihilator)
from .rings import RingSpec
from .schurweyl import (all_indices, embedding_map, hecke_tensor_action, phi_iso,
                        root_vector, u_generator_action, weight, weight_space)
from .symgroup import Permutation, parse_cycles, to_cycles
from .verify import EXTRA_SUITES, SUITES, run_suite

__all__ = ["main", "run", "build_parser", "F12_PRINTED"]

QV_KERNEL_CEILING = 5
NUMERIC_KERNEL_CEILING = 6
CLOSED_CEILING = 6

F12_PRINTED = (
    (1, 1, 0, 1, 0, 0),
    (1, 0, 1, 0, 1, 0),
    (0, 1, 1, 0, 0, 1),
    (0, 0, 0, 1, 1, 1),
)


class UsageError(Exception):
    """Bad flag value discovered after parsing; exit code 2."""


# -- argument types --------------------------------------------------------------

def _ring(text: str) -> RingSpec:
    try:
        return RingSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parts(text: str):
    try:
        return parse_parts(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _tableau(text: str):
    try:
        return parse_tableau(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if k < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {k}")
    return k


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heckeann", description="Exact Iwahori-Hecke algebra computations.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, ring_default="laurent"):
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--ring", type=_ring, default=RingSpec.parse(ring_default),
                       help="laurent | qv | q_rat:v=a/b | gfp:p=P,v=R")
        p.add_argument("--allow-large", action="store_true", help="lift the desk-scale size ceilings")
        p.add_argument("--plot-dir", type=Path, default=None, help="write PNG figures here")

    p = sub.add_parser("basis", help="Murphy basis and its change-of-basis determinant")
    common(p)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--kind", choices=("x", "y", "x_sharp"), default="x")

    p = sub.add_parser("element", help="a single Murphy element or basis element")
    common(p)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--s", type=_tableau)
    p.add_argument("--t", type=_tableau)
    p.add_argument("--kind", choices=("x", "y", "x_sharp"), default="x")
    p.add_argument("--perm", help="one-line (2,1,3) or cycle notation ((12)) for T_w")
    p.add_argument("--op", choices=("T", "inverse", "star", "dagger", "sharp"), default="T")

    p = sub.add_parser("ann", help="annihilator of the permutation module M^lambda")
    common(p)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--lambda", dest="lam", type=_parts, required=True)
    p.add_argument("--method", choices=("closed", "kernel", "both"), default="both")

    p = sub.add_parser("tensor", help="operators on tensor space")
    common(p)
    p.add_argument("--m", type=_positive, default=None)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--op", required=True,
                   help="E<i> | F<i> | K<i> | Kinv<i> | T<k> | root:i,j | phi | embed:i,j")
    p.add_argument("--weight", type=_parts, default=None, help="restrict to this weight space")
    p.add_argument("--lambda", dest="lam", type=_parts, default=None, help="shape for phi")

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--suite", choices=("all", *SUITES, *EXTRA_SUITES), default="all")
    p.add_argument("--max-n", type=_positive, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--plot-dir", type=Path, default=None)

    p = sub.add_parser("example", help="reproduce the worked examples")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--which", choices=("seven", "f12"), default="seven")
    p.add_argument("--plot-dir", type=Path, default=None)
    return parser


# -- helpers ----------------------------------------------------------------------

def _at_one(ring: RingSpec) -> bool:
    return ring.tag in ("q_rat", "gfp") and ring.value == 1


def _render(elt) -> str:
    return elt.cycle_string() if _at_one(elt.ring) else str(elt)


def _ceiling(n: int, ring: RingSpec, kind: str, allow: bool) -> None:
    if allow:
        return
    if kind == "kernel":
        cap = QV_KERNEL_CEILING if ring.tag in ("laurent", "qv") else NUMERIC_KERNEL_CEILING
    else:
        cap = CLOSED_CEILING
    if n > cap:
        raise UsageError(f"--n {n} exceeds the {kind} ceiling {cap} for ring {ring}; pass --allow-large")


def _partition_for(args) -> Partition:
    lam = args.lam
    if lam.n != args.n:
        raise UsageError(f"--lambda {lam} is not a partition of --n {args.n}")
    if not lam.is_partition():
        raise UsageError(f"--lambda {lam} must be a partition (weakly decreasing)")
    return Partition(lam)


def _label(idx: MurphyIndex) -> str:
    return f"({idx.s} | {idx.t})"


# -- verbs --------------------------------------------------------------------------

def cmd_basis(args) -> tuple[dict, str, int]:
    _ceiling(args.n, args.ring, "closed", args.allow_large)
    elts = murphy_basis(args.n, args.ring, args.kind)
    det = murphy_change_of_basis(args.n, args.ring, args.kind).det()
    data = {
        "n": args.n,
        "ring": args.ring.to_json(),
        "kind": args.kind,
        "indices": [{"shape": list(i.shape), "s": str(i.s), "t": str(i.t)} for i in elts],
        "elements": [e.to_json() for e in elts.values()],
        "determinant": args.ring.element_to_json(det),
        "verdict": "pass" if det else "fail",
    }
    lines = [f"{args.kind}_{_label(i)} = {_render(e)}" for i, e in elts.items()]
    lines.append(f"determinant = {det}")
    return data, "\n".join(lines), 0 if det else 1


def cmd_element(args) -> tuple[dict, str, int]:
    alg = hecke_algebra(args.n, args.ring)
    if args.perm:
        text = args.perm.strip()
        try:
            if "," in text:
                w = Permutation(int(x) for x in text.strip("()").split(","))
            else:
                w = parse_cycles(text, args.n)
        except ValueError as exc:
            raise UsageError(f"--perm: {exc}") from None
        if len(w) != args.n:
            raise UsageError(f"--perm has {len(w)} points, expected --n {args.n}")
        elt = t_inverse(w, alg) if args.op == "inverse" else alg.T(w)
        if args.op in ("star", "dagger", "sharp"):
            elt = involution(elt, args.op)
        label = f"{args.op}({to_cycles(w)})"
    else:
        if args.s is None or args.t is None:
            raise UsageError("element needs --s and --t, or --perm")
        if args.s.n != args.n or args.s.shape != args.t.shape:
            raise UsageError(f"--s {args.s} and --t {args.t} must share a shape of size --n {args.n}")
        if not (args.s.row_standard and args.t.row_standard):
            raise UsageError("--s and --t must be row-standard")
        idx = MurphyIndex.of(args.s, args.t)
        elt = murphy_element(idx, args.kind, alg)
        label = f"{args.kind}_{_label(idx)}"
    data = {"label": label, "element": elt.to_json()}
    return data, f"{label} = {_render(elt)}", 0


def _equality_expected(ring: RingSpec, n: int) -> bool:
    return ring.tag in ("laurent", "qv") or is_semisimple(ring, n)[0]


def cmd_ann(args) -> tuple[dict, str, int]:
    lam = _partition_for(args)
    n, ring = args.n, args.ring
    data = {"n": n, "lambda": list(lam), "ring": ring.to_json(), "method": args.method}
    lines = [f"lambda = {lam}, ring = {ring}"]
    code = 0
    figures = []
    if args.method == "closed":
        _ceiling(n, ring, "closed", args.allow_large)
        closed = annihilator_closed(lam, ring)
        data["closed_rank"] = len(closed)
        data["generators"] = [{"label": _label(i), "element": e.to_json()}
                              for i, e in zip(closed.labels, closed.elements)]
        data["verdict"] = "pass"
        lines.append(f"closed rank = {len(closed)}")
        lines += [f"x♯_{_label(i)} = {_render(e)}" for i, e in zip(closed.labels, closed.elements)]
        if args.plot_dir and closed.elements:
            figures.append(_plot_generators(closed, args.plot_dir / f"ann_{lam}_generators.png"))
    elif args.method == "kernel":
        if not ring.is_field and ring.tag != "laurent":
            raise UsageError(f"--ring {ring} is not a field")
        _ceiling(n, ring, "kernel", args.allow_large)
        ker = annihilator_kernel(lam, ring)
        data["kernel_rank"] = len(ker)
        data["kernel"] = [k.to_json() for k in ker]
        expected = semisimple_kernel_rank(lam)
        data["semisimple_rank"] = expected
        ok = len(ker) == expected or not _equality_expected(ring, n)
        data["verdict"] = "pass" if ok else "fail"
        code = 0 if ok else 1
        lines.append(f"kernel rank = {len(ker)} (semisimple value {expected})")
    else:
        _ceiling(n, ring, "kernel", args.allow_large)
        rep = verify_annihilator(lam, ring)
        data.update(rep.to_json(with_generators=False))
        data["method"] = "both"
        expected = _equality_expected(ring, n)
        ok = rep.containment_ok and (rep.equality_ok or not expected)
        data["equality_expected"] = expected
        data["verdict"] = "pass" if ok else "fail"
        code = 0 if ok else 1
        lines.append(f"closed rank = {rep.closed_rank}, kernel rank = {rep.kernel_rank}")
        lines.append(f"containment = {rep.containment_ok}, equality = {rep.equality_ok}")
        if rep.witness is not None:
            lines.append(f"witness outside closed span: {_render(rep.witness)}")
        for spec in rep.specializations:
            lines.append(f"  at {RingSpec.from_json(spec['ring'])}: closed {spec['closed_rank']}, "
                         f"kernel {spec['kernel_rank']}, equal {spec['equal']}, semisimple {spec['semisimple']}")
        if args.plot_dir:
            labels = [str(ring)] + [str(RingSpec.from_json(s["ring"])) for s in rep.specializations]
            closed = [rep.closed_rank] + [s["closed_rank"] for s in rep.specializations]
            kernel = [rep.kernel_rank] + [s["kernel_rank"] for s in rep.specializations]
            from .plotting import plot_rank_comparison
            figures.append(plot_rank_comparison(labels, closed, kernel,
                                                args.plot_dir / f"ann_{lam}_ranks.png",
                                                f"annihilator of M^({lam})"))
    if figures:
        data["figures"] = figures
    lines.append(f"verdict = {data['verdict']}")
    return data, "\n".join(lines), code


def _plot_generators(closed, path: Path) -> str:
    from .plotting import plot_coefficient_heatmap
    one = RingSpec.rationals(1)
    elts = [e if e.ring == one else (e.specialize(one) if e.ring.tag == "laurent" else None)
            for e in closed.elements]
    if any(e is None for e in elts):
        elts = [e.specialize(one) for e in annihilator_closed(Partition(closed.labels[0].shape), RingSpec.laurent()).elements]
    group = elts[0].alg.group
    rows = [[int(e.terms.get(k, 0)) for k in range(len(group))] for e in elts]
    return plot_coefficient_heatmap(rows, [_label(i) for i in closed.labels],
                                    [to_cycles(w) for w in group.elements], path,
                                    "closed generators at v = 1")


def _tensor_operator(args):
    m = args.m or args.n
    op = args.op
    try:
        if op.startswith("T") and op[1:].isdigit():
            return hecke_tensor_action(int(op[1:]), m, args.n), m, (0,) * m
        if op.startswith("root:"):
            i, j = (int(x) for x in op[5:].split(","))
            shift = [0] * m
            shift[i - 1] += 1
            shift[j - 1] -= 1
            return root_vector(i, j, m, args.n), m, tuple(shift)
        base = op.lstrip("KinvEF")
        i = int(base) if base.isdigit() else None
        gen = u_generator_action(op, m, args.n)
        shift = [0] * m
        if op.startswith("E"):
            shift[i - 1] += 1
            shift[i] -= 1
        elif op.startswith("F"):
            shift[i - 1] -= 1
            shift[i] += 1
        return gen, m, tuple(shift)
    except (ValueError, IndexError) as exc:
        raise UsageError(f"--op {op}: {exc}") from None


def cmd_tensor(args) -> tuple[dict, str, int]:
    ring = args.ring
    if ring.tag == "laurent":
        ring = RingSpec.qv()
    m = args.m or args.n
    if m ** args.n > 4096 and not args.allow_large:
        raise UsageError(f"m^n = {m ** args.n} exceeds 4096; pass --allow-large")
    figures = []
    if args.op == "phi":
        shape = args.lam or args.weight
        if shape is None or shape.n != args.n:
            raise UsageError("phi needs --lambda, a composition of --n")
        mat = phi_iso(shape, m)
    elif args.op.startswith("embed:"):
        if args.weight is None:
            raise UsageError("embed:i,j needs --weight (the domain weight)")
        try:
            i, j = (int(x) for x in args.op[6:].split(","))
            mat = embedding_map(args.weight, i, j, m, args.n)
        except ValueError as exc:
            raise UsageError(f"--op {args.op}: {exc}") from None
    else:
        op, m, shift = _tensor_operator(args)
        if args.weight is not None:
            try:
                dom = weight_space(args.weight, m, args.n)
                tgt = tuple(a + b for a, b in zip(weight(dom[0], m), shift)) if dom else None
                cod = weight_space(tgt, m, args.n) if tgt and min(tgt) >= 0 else ()
            except ValueError as exc:
                raise UsageError(f"--weight: {exc}") from None
        else:
            dom = cod = all_indices(m, args.n)
        mat = op.restrict(dom, cod)
    out = mat if ring.tag in ("laurent", "qv") and ring.tag == mat.ring.tag else mat.specialize(ring)
    data = {
        "op": args.op,
        "m": m,
        "n": args.n,
        "ring": ring.to_json(),
        "shape": [out.nrows, out.ncols],
        "rows": [list(x) if isinstance(x, tuple) else str(x) for x in out.row_labels],
        "cols": [list(x) if isinstance(x, tuple) else str(x) for x in out.col_labels],
        "entries": [[ring.element_to_json(x) for x in r] for r in out.rows],
        "rank": out.rank(),
    }
    lines = [f"{args.op} on m={m}, n={args.n} over {ring}: {out.nrows} x {out.ncols}, rank {data['rank']}"]
    for lab, r in zip(out.row_labels, out.rows):
        lines.append(f"{lab}: " + " ".join(str(x) for x in r))
    if args.plot_dir and ring.tag in ("q_rat", "gfp"):
        from .plotting import plot_integer_matrix
        rows = [[int(x) for x in r] for r in out.rows]
        figures.append(plot_integer_matrix(rows, [str(x) for x in out.row_labels],
                                           [str(x) for x in out.col_labels],
                                           args.plot_dir / f"tensor_{args.op.replace(':', '_')}.png",
                                           f"{args.op} over {ring}"))
        data["figures"] = figures
    return data, "\n".join(lines), 0


def cmd_verify(args) -> tuple[dict, str, int]:
    if args.max_n > 5 and not args.allow_large:
        raise UsageError(f"--max-n {args.max_n} exceeds 5; pass --allow-large")
    checks = run_suite(args.suite, args.max_n, args.seed)
    ok = all(c.passed for c in checks)
    data = {
        "suite": args.suite,
        "n": args.max_n,
        "max_n": args.max_n,
        "lambda": "all partitions of n <= max_n",
        "ring": "per check",
        "seed": args.seed,
        "checks": [c.to_json() for c in checks],
        "passed": sum(c.passed for c in checks),
        "failed": sum(not c.passed for c in checks),
        "verdict": "pass" if ok else "fail",
    }
    lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name}" + (f"  [{c.detail}]" if c.detail and not c.passed else "")
             for c in checks]
    lines.append(f"{data['passed']} passed, {data['failed']} failed")
    if args.plot_dir:
        from .plotting import plot_rank_comparison
        data["figures"] = [plot_rank_comparison(["checks"], [data["passed"]], [data["failed"]],
                                                args.plot_dir / f"verify_{args.suite}.png",
                                                "passed (left) / failed (right)")]
    return data, "\n".join(lines), 0 if ok else 1


def f12_report() -> dict:
    """The F_1 map from weight (3,1) to weight (2,2), m = 2, n = 4, at v = 1."""
    mat = embedding_map((3, 1), 1, 2, 2, 4)
    q1, gf2 = RingSpec.rationals(1), RingSpec.gfp(2, 1)
    at_one = mat.specialize(q1)
    rows = [[int(x) for x in r] for r in at_one.rows]
    return {
        "domain": ["".join(map(str, i)) for i in mat.row_labels],
        "codomain": ["".join(map(str, i)) for i in mat.col_labels],
        "matrix": rows,
        "matches_printed": tuple(map(tuple, rows)) == F12_PRINTED,
        "rank_q": at_one.rank(),
        "rank_gf2": mat.specialize(gf2).rank(),
        "rank_qv": mat.rank(),
    }


def cmd_example(args) -> tuple[dict, str, int]:
    figures = []
    if args.which == "f12":
        data = f12_report()
        lines = ["f12 at v = 1, rows " + " ".join(data["domain"]) + ", columns " + " ".join(data["codomain"])]
        lines += [" ".join(map(str, r)) for r in data["matrix"]]
        lines.append(f"rank over Q = {data['rank_q']}, over GF(2) = {data['rank_gf2']}, over Q(v) = {data['rank_qv']}")
        ok = data["matches_printed"] and data["rank_q"] == 4 and data["rank_gf2"] == 3
        if args.plot_dir:
            from .plotting import plot_integer_matrix
            figures.append(plot_integer_matrix(data["matrix"], data["domain"], data["codomain"],
                                               args.plot_dir / "f12.png", "f12 at v = 1"))
    else:
        data = counterexample_report()
        lines = ["lambda = (2,2), v = 1; a = 1,2,3,4  b = 1,2,3/4  c = 1,2,4/3  d = 1,3,4/2"]
        lines += [f"x♯_{{{g['label']}}} = {g['cycles']}" for g in data["generators"]]
        lines.append(f"annihilator dimension over Q: {data['dim_char0']}")
        lines.append(f"annihilator dimension over GF(2): {data['dim_char2']}")
        lines.append(f"r = {data['r']} annihilates mod 2: {data['r_annihilates']}")
        lines.append(f"r in the reduced span: {data['membership_of_r']}")
        lines.append(f"kernel witness outside the span: {data['witness']}")
        ok = (data["dim_char0"] == 10 and data["dim_char2"] == 11 and data["r_annihilates"]
              and not data["membership_of_r"])
        if args.plot_dir:
            from .plotting import plot_rank_comparison
            closed = annihilator_closed((2, 2), RingSpec.laurent())
            figures.append(_plot_generators(closed, args.plot_dir / "example_seven_generators.png"))
            figures.append(plot_rank_comparison(["Q, v=1", "GF(2), v=1"], [10, 10],
                                                [data["dim_char0"], data["dim_char2"]],
                                                args.plot_dir / "example_seven_ranks.png",
                                                "annihilator of M^(2,2)"))
    data.setdefault("n", 4)
    data.setdefault("lambda", [3, 1] if args.which == "f12" else [2, 2])
    data.setdefault("ring", RingSpec.rationals(1).to_json())
    data["verdict"] = "pass" if ok else "fail"
    if figures:
        data["figures"] = figures
    lines.append(f"verdict = {data['verdict']}")
    return data, "\n".join(lines), 0 if ok else 1


VERBS = {
    "basis": cmd_basis,
    "element": cmd_element,
    "ann": cmd_ann,
    "tensor": cmd_tensor,
    "verify": cmd_verify,
    "example": cmd_example,
}


def run(argv: Optional[Sequence[str]] = None) -> tuple[int, str]:
    """Parse and execute; returns (exit code, text written to stdout)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        data, text, code = VERBS[args.verb](args)
    except UsageError as exc:
        print(f"heckeann {args.verb}: error: {exc}", file=sys.stderr)
        return 2, ""
    if args.format == "json":
        out = json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)
    else:
        out = text
    return code, out + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out = run(argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
