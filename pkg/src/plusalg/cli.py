"""Command-line entry point.

Exit codes: 0 success, 1 a checked identity fails, 2 bad input, 3 budget exhausted
(the partial report is still written).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .algebra import perfect_radical, uce
from .errors import BudgetExceeded, ParseError, PlusAlgError
from .fileformats import load_algebra, load_operad, load_otree, load_presentation, write_algebra
from .freealg import admissibility_probe, hurewicz, pi0, quillen_homology
from .linalg import field_from_name
from .matrices import MatrixAlgebraSpec, gl, matrix_ring, product_ring, sl
from .operads import SigmaModule, check_may_axioms, classical_operad, free_operad
from .plus import cone_presentation, cone_report, otree_family, otree_telescope, plus_report, telescope_report
from .theories import DEFAULT_BUDGET, PAIRS, homology_dim, stability_sweep, theory_homology, thread_count

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class JobSpec:
    command: str
    inputs: Dict[str, str] = field(default_factory=dict)
    theory: Optional[str] = None
    n_range: Sequence[int] = ()
    degrees: Sequence[int] = ()
    budget: int = DEFAULT_BUDGET
    fmt: str = "tsv"
    options: Dict[str, object] = field(default_factory=dict)

    def validate(self):
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.fmt not in ("tsv", "json"):
            raise ValueError(f"unknown output format {self.fmt!r}")
        if "n_range" in self.options and not self.n_range:
            raise ValueError("empty n range")


class _Out:
    def __init__(self):
        self.chunks: List[str] = []

    def __call__(self, s=""):
        self.chunks.append(s if s.endswith("\n") else s + "\n")

    def text(self):
        return "".join(self.chunks)


def _table(fmt, header, rows, meta=None) -> str:
    if fmt == "json":
        payload = dict(meta or {})
        payload["rows"] = [dict(zip(header, r)) for r in rows]
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    lines = []
    for k, v in (meta or {}).items():
        lines.append(f"# {k}={v}")
    lines.append("\t".join(header))
    lines.extend("\t".join(str(x) for x in r) for r in rows)
    return "\n".join(lines) + "\n"


def _parse_range(s: str) -> List[int]:
    if ".." in s:
        a, b = s.split("..", 1)
        return list(range(int(a), int(b) + 1))
    return [int(x) for x in s.split(",") if x]


# ---------------------------------------------------------------------------
# commands


def cmd_homology(job: JobSpec, out: _Out) -> int:
    a = load_algebra(job.inputs["algebra"])
    top = max(job.degrees)
    rep = theory_homology(job.theory, a, top, job.budget)
    dims = {k: rep.dims[k] for k in job.degrees}
    if job.options.get("reduced") and 0 in dims and job.theory in ("ce", "leibniz"):
        dims[0] -= 1
    rows = [(k, dims[k]) for k in job.degrees]
    out(_table(job.fmt, ["degree", "dimension"], rows, {"theory": job.theory, "algebra": a.name, "reduced": bool(job.options.get("reduced"))}))
    return EXIT_OK


def _corollary_sides(ring, n, degree, pair_kind, budget):
    mtheory = "ce" if pair_kind == "lie" else "leibniz"
    rtheory = "cyclic" if pair_kind == "lie" else "hochschild"
    spec = MatrixAlgebraSpec(ring, n, pair_kind)
    if degree == 0:
        g, what = gl(spec), f"gl_{n}"
    elif degree == 1:
        g, what = sl(spec), f"sl_{n}"
    elif degree == 2:
        g, what = uce(sl(spec), pair_kind).algebra, f"uce(sl_{n})"
    else:
        raise ValueError("verify corollary handles ring degrees 0, 1 and 2")
    left = homology_dim(mtheory, g, degree + 1, budget)
    right = homology_dim(rtheory, ring, degree, budget)
    return (f"H_{degree + 1}^{mtheory}({what}({ring.name}))", left), (f"{rtheory}_{degree}({ring.name})", right)


def cmd_verify(job: JobSpec, out: _Out) -> int:
    what = job.options["what"]
    ring = load_algebra(job.inputs["ring"])
    rows = []
    if what == "corollary":
        kind = job.options.get("pair", "lie")
        for d in job.degrees:
            (ln, lv), (rn, rv) = _corollary_sides(ring, job.n_range[0], d, kind, job.budget)
            rows.append((d, ln, lv, rn, rv, "PASS" if lv == rv else "FAIL"))
    elif what == "morita":
        n = job.n_range[0] if job.n_range else 2
        m = matrix_ring(ring, n)
        for th in ("cyclic", "hochschild"):
            for d in job.degrees:
                lv = homology_dim(th, m, d, job.budget)
                rv = homology_dim(th, ring, d, job.budget)
                rows.append((d, f"{th}_{d}({m.name})", lv, f"{th}_{d}({ring.name})", rv, "PASS" if lv == rv else "FAIL"))
    elif what == "products":
        other = load_algebra(job.inputs["ring2"])
        pr = product_ring(ring, other)
        for th in ("cyclic", "hochschild"):
            for d in job.degrees:
                lv = homology_dim(th, pr, d, job.budget)
                a = homology_dim(th, ring, d, job.budget)
                b = homology_dim(th, other, d, job.budget)
                rows.append((d, f"{th}_{d}({pr.name})", lv, f"{th}_{d}({ring.name})+{th}_{d}({other.name})", a + b, "PASS" if lv == a + b else "FAIL"))
    else:
        raise ValueError(f"unknown verification {what!r}")
    out(_table(job.fmt, ["degree", "left", "left_dim", "right", "right_dim", "verdict"], rows, {"check": what}))
    return EXIT_OK if all(r[-1] == "PASS" for r in rows) else EXIT_FAIL


def cmd_sweep(job: JobSpec, out: _Out) -> int:
    ring = load_algebra(job.inputs["ring"])
    table = stability_sweep(ring, job.options["pair"], job.n_range, job.degrees[0], job.budget)
    out(table.to_json() + "\n" if job.fmt == "json" else table.to_tsv())
    return EXIT_BUDGET if table.truncated else EXIT_OK


def _operad_from(job: JobSpec):
    amax = job.options.get("arity_max", 4)
    fld = field_from_name(job.options.get("scalars", "Q"))
    if "operad" in job.inputs:
        return load_operad(job.inputs["operad"])
    name = job.options.get("operad_name")
    if name == "free" or name is None:
        k = job.options.get("gen_arity", 2)
        rep = job.options.get("rep", "regular")
        m = SigmaModule.regular(fld, k) if rep == "regular" else SigmaModule.trivial(fld, k, 1, sign=rep == "sign")
        return free_operad(m, amax)
    return classical_operad(name, amax, fld)


def cmd_operad(job: JobSpec, out: _Out) -> int:
    what = job.options["what"]
    op = _operad_from(job)
    if what == "free" or what == "dims":
        rows = [(n, d) for n, d in op.dims().items()]
        out(_table(job.fmt, ["arity", "dimension"], rows, {"operad": op.name}))
        return EXIT_OK
    if what == "check":
        rep = check_may_axioms(op)
        rows = [(n, d) for n, d in op.dims().items()]
        out(_table(job.fmt, ["arity", "dimension"], rows, {"operad": op.name, "may_axioms": rep.summary()}))
        return EXIT_OK if rep.ok else EXIT_FAIL
    if what == "probe":
        r = admissibility_probe(op, None, job.options["probe_degree"], job.options["weight_max"], max(job.degrees))
        if job.fmt == "json":
            out(json.dumps({"verdict": r.verdict, "first_difference": r.first_difference, "mode": r.mode}, sort_keys=True))
        else:
            out(r.to_tsv())
        return EXIT_OK
    raise ValueError(f"unknown operad command {what!r}")


def cmd_plus(job: JobSpec, out: _Out) -> int:
    a = load_algebra(job.inputs["algebra"])
    rep = plus_report(a)
    ok = perfect_radical(rep.result).dim == 0 and rep.q_source == rep.q_result
    if job.fmt == "json":
        out(json.dumps({
            "source_dim": a.dim, "radical_dim": rep.radical.dim, "result_dim": rep.result.dim,
            "q_source": rep.q_source, "q_result": rep.q_result, "ok": ok,
        }, sort_keys=True))
    else:
        out(f"# {rep.summary()}")
        out(write_algebra(rep.result))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_utree(job: JobSpec, out: _Out) -> int:
    what = job.options["what"]
    r = job.options.get("r_max", 1)
    w = job.options.get("weight_max", 2)
    if what == "check" and "tree" not in job.inputs:
        op = classical_operad(job.options.get("family", "lie"))
        trees = otree_family(op)
    else:
        op, t = load_otree(job.inputs["tree"])
        trees = [t]
    if what == "build":
        u = otree_telescope(op, trees[0], r)
        out(u.describe())
        h = quillen_homology(u)
        out(_table(job.fmt, ["degree", "HQ"], [(k, h.dims[k]) for k in h.degrees()], {"generators": len(u.generators)}))
        return EXIT_OK
    if what == "cone":
        u = otree_telescope(op, trees[0], r)
        c = cone_presentation(u)
        p = pi0(c, w)
        h = quillen_homology(c)
        out(_table(job.fmt, ["weight", "pi0"], list(enumerate(p.graded, start=1)), {"generators": len(c.generators)}))
        out(_table(job.fmt, ["degree", "HQ"], [(k, h.dims[k]) for k in h.degrees()]))
        ok = p.dim == 0 and not any(h.dims.values())
        return EXIT_OK if ok else EXIT_FAIL
    if what == "check":
        rows = []
        ok = True
        for t in trees:
            for rr in range(0, min(t.depth, r) + 1):
                tr = telescope_report(op, t, rr)
                cr = cone_report(otree_telescope(op, t, rr), w)
                rows.append((t.name, rr, tr.hq_low_stages, tr.hq.get(0, 0), tr.top_stage, "-" if tr.transition_rank is None else tr.transition_rank, sum(cr.pi0), sum(cr.hq.values()), "PASS" if tr.ok and cr.ok else "FAIL"))
                ok = ok and tr.ok and cr.ok
        out(_table(job.fmt, ["tree", "r", "HQ_low", "HQ0", "top_vertices", "transition_rank", "cone_pi0", "cone_HQ", "verdict"], rows))
        return EXIT_OK if ok else EXIT_FAIL
    raise ValueError(f"unknown utree command {what!r}")


def cmd_hurewicz(job: JobSpec, out: _Out) -> int:
    p = load_presentation(job.inputs["presentation"])
    h = hurewicz(p, max(job.degrees), job.options.get("weight_max"))
    v = h.range_verdict()
    if job.fmt == "json":
        out(json.dumps({"table": h.to_tsv(), **v}, sort_keys=True))
    else:
        out(h.to_tsv() + "# " + " ".join(f"{k}={v[k]}" for k in sorted(v)))
    return EXIT_OK if v["iso_ok"] and v["epi_ok"] is not False else EXIT_FAIL


COMMANDS = {
    "homology": cmd_homology,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "operad": cmd_operad,
    "plus": cmd_plus,
    "utree": cmd_utree,
    "hurewicz": cmd_hurewicz,
}


def run(job: JobSpec, out: Optional[_Out] = None) -> int:
    out = out if out is not None else _Out()
    job.validate()
    return COMMANDS[job.command](job, out)


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="plusalg", description="Exact homology and plus-construction computations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["tsv", "json"], default="tsv")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest basis size per degree")
    common.add_argument("--output", help="write the report here as well as to stdout")
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("homology", parents=[common], help="homology of an algebra file")
    h.add_argument("--theory", required=True, choices=["ce", "leibniz", "hochschild", "cyclic"])
    h.add_argument("--algebra", required=True)
    h.add_argument("--max-degree", type=int, required=True)
    h.add_argument("--reduced", action="store_true", help="drop the unit class in degree 0 (ce, leibniz)")

    v = sub.add_parser("verify", parents=[common], help="check an identity, printing both sides")
    v.add_argument("what", choices=["corollary", "morita", "products"])
    v.add_argument("--ring", required=True)
    v.add_argument("--ring2")
    v.add_argument("--n", type=int, default=None)
    v.add_argument("--degree", type=int, default=None)
    v.add_argument("--max-degree", type=int, default=None)
    v.add_argument("--pair", choices=["lie", "leibniz"], default="lie")

    s = sub.add_parser("sweep", parents=[common], help="stabilization table in n")
    s.add_argument("--ring", required=True)
    s.add_argument("--pair", choices=sorted(PAIRS), default="lie")
    s.add_argument("--n-range", default="2..5")
    s.add_argument("--degree", type=int, default=2)

    o = sub.add_parser("operad", parents=[common], help="operad dimensions, axioms, admissibility")
    o.add_argument("what", choices=["free", "check", "dims", "probe"])
    o.add_argument("--operad", help="operad file, or one of com/as/lie/leib")
    o.add_argument("--scalars", default="Q")
    o.add_argument("--arity-max", type=int, default=4)
    o.add_argument("--generator-arity", type=int, default=2)
    o.add_argument("--rep", choices=["regular", "trivial", "sign"], default="regular")
    o.add_argument("--probe-degree", type=int, default=1)
    o.add_argument("--weight-max", type=int, default=3)
    o.add_argument("--max-degree", type=int, default=6)

    pl = sub.add_parser("plus", parents=[common], help="degree-0 plus construction")
    pl.add_argument("what", choices=["pi0"])
    pl.add_argument("--algebra", required=True)

    u = sub.add_parser("utree", parents=[common], help="O-tree telescopes and cones")
    u.add_argument("what", choices=["build", "cone", "check"])
    u.add_argument("--tree")
    u.add_argument("--family", choices=["lie", "as"], default="lie")
    u.add_argument("--r-max", type=int, default=1)
    u.add_argument("--weight-max", type=int, default=2)

    hu = sub.add_parser("hurewicz", parents=[common], help="Hurewicz map of a presentation file")
    hu.add_argument("--presentation", required=True)
    hu.add_argument("--max-degree", type=int, required=True)
    hu.add_argument("--weight-max", type=int, default=None)
    return p


def job_from_args(a) -> JobSpec:
    job = JobSpec(a.command, budget=a.budget, fmt=a.format)
    if a.command == "homology":
        job.inputs["algebra"] = a.algebra
        job.theory = a.theory
        job.degrees = list(range(0, a.max_degree + 1))
        job.options["reduced"] = a.reduced
    elif a.command == "verify":
        job.inputs["ring"] = a.ring
        job.options["what"] = a.what
        job.options["pair"] = a.pair
        if a.ring2:
            job.inputs["ring2"] = a.ring2
        if a.what == "products" and not a.ring2:
            raise ValueError("verify products needs --ring2")
        if a.what == "corollary":
            job.n_range = [a.n if a.n is not None else 4]
            job.degrees = [a.degree if a.degree is not None else 1]
        else:
            job.n_range = [a.n] if a.n is not None else []
            top = a.max_degree if a.max_degree is not None else (3 if a.what == "morita" else 2)
            job.degrees = list(range(0, top + 1))
    elif a.command == "sweep":
        job.inputs["ring"] = a.ring
        job.options["pair"] = a.pair
        job.options["n_range"] = True
        job.n_range = _parse_range(a.n_range)
        job.degrees = [a.degree]
    elif a.command == "operad":
        job.options.update(
            what=a.what, scalars=a.scalars, arity_max=a.arity_max, gen_arity=a.generator_arity, rep=a.rep,
            probe_degree=a.probe_degree, weight_max=a.weight_max,
        )
        job.degrees = list(range(0, a.max_degree + 1))
        if a.operad and a.operad.lower() in ("com", "as", "lie", "leib", "free"):
            job.options["operad_name"] = a.operad.lower()
        elif a.operad:
            job.inputs["operad"] = a.operad
    elif a.command == "plus":
        job.inputs["algebra"] = a.algebra
    elif a.command == "utree":
        if a.tree:
            job.inputs["tree"] = a.tree
        elif a.what != "check":
            raise ValueError(f"utree {a.what} needs --tree")
        job.options.update(what=a.what, r_max=a.r_max, weight_max=a.weight_max, family=a.family)
    elif a.command == "hurewicz":
        job.inputs["presentation"] = a.presentation
        job.degrees = list(range(0, a.max_degree + 1))
        job.options["weight_max"] = a.weight_max
    return job


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out()
    code = EXIT_OK
    try:
        job = job_from_args(args)
        job.options["threads"] = thread_count()
        code = run(job, out)
    except ParseError as e:
        print(f"input error: {e}", file=sys.stderr)
        code = EXIT_INPUT
    except BudgetExceeded as e:
        out(f"# budget exhausted: {e}")
        code = EXIT_BUDGET
    except (ValueError, TypeError, KeyError, PlusAlgError) as e:
        print(f"input error: {e}", file=sys.stderr)
        code = EXIT_INPUT
    text = out.text()
    sys.stdout.write(text)
    if getattr(args, "output", None) and text:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
