"""Command-line front end: ``acis <command> --vars ... (-f EXPR | --ideal EXPR;EXPR)``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import __version__
from .gorenstein import (
    GorensteinError,
    InternalCheckError,
    conjecture_check,
    ev_levine,
    h0m_general,
    jacobian_module,
    pencil_signature,
    real_branches,
    signature,
)
from .groebner.ideal import Ideal
from .homology import HomologyError
from .polyarith import Polynomial, PolynomialError, Ring, format_polynomial, gradient, parse
from .realtopo import EulerError, euler_rp2, verify_signature_theorem
from .realtopo import univariate as up
from .realtopo.cad import cad_plane
from .realtopo.euler import affine_chart

COMMANDS = ("signature", "euler", "verify", "hilbert", "module", "conjecture", "evlevine", "branches", "pencil", "plot")

EXIT_OK, EXIT_PRECONDITION, EXIT_VERIFY, EXIT_INTERNAL = 0, 2, 3, 4


class UsageError(ValueError):
    pass


class Job:
    """Validated configuration for one invocation."""

    def __init__(self, args: argparse.Namespace):
        self.command: str = args.command
        names = [v.strip() for v in args.vars.split(",") if v.strip()]
        if not names:
            raise UsageError("--vars must name at least one variable")
        weights = None
        if args.weights:
            weights = [int(w) for w in args.weights.split(",")]
            if len(weights) != len(names):
                raise UsageError("--weights must match --vars in length")
        self.ring = Ring(names, weights)
        self.f: Optional[Polynomial] = parse(args.f, self.ring) if args.f else None
        self.ideal: List[Polynomial] = (
            [parse(t, self.ring) for t in args.ideal.split(";") if t.strip()] if args.ideal else []
        )
        if self.f is None and not self.ideal:
            raise UsageError("give a polynomial with -f or generators with --ideal")
        self.mode: str = args.mode
        self.degree_bound: Optional[int] = args.degree_bound
        self.seed: int = args.seed
        self.format: str = args.format
        self.samples: List[Fraction] = (
            [Fraction(s.strip()) for s in args.samples.split(",") if s.strip()] if args.samples else []
        )

    def sequence(self) -> List[Polynomial]:
        return self.ideal if self.ideal else list(gradient(self.f))

    def single(self) -> Polynomial:
        if self.f is None:
            raise UsageError(f"{self.command} needs a polynomial given with -f")
        return self.f

    def header(self) -> Dict[str, object]:
        return {
            "command": self.command,
            "vars": list(self.ring.names),
            "weights": list(self.ring.weights),
            "seed": self.seed,
        }


def _fr(v) -> str:
    return str(Fraction(v))


def _hilbert(h) -> Dict[str, object]:
    return {"poincare": h.polynomial(), "values": h.as_dict()}


# -- commands --------------------------------------------------------------------


def cmd_signature(job: Job) -> Dict[str, object]:
    target = job.ideal if job.ideal else job.single()
    rep = signature(target, mode=job.mode, seed=job.seed)
    M = rep.module
    return {
        "dim_M": M.dim,
        "hilbert": M.hilbert.polynomial(),
        "socle_degree": M.socle_degree,
        "mode": rep.mode,
        "basis": M.labels(),
        "gram": rep.gram.as_strings(),
        "inertia": [rep.n_plus, rep.n_minus, rep.n_zero],
        "signature": rep.signature,
        "normalization": {k: str(v) for k, v in rep.gram.normalization.items()},
        "checks": {k: str(v) for k, v in rep.checks.items()},
    }


def cmd_euler(job: Job) -> Dict[str, object]:
    return euler_rp2(job.single()).as_dict()


def cmd_verify(job: Job) -> Dict[str, object]:
    return verify_signature_theorem(job.single(), mode=job.mode, seed=job.seed).as_dict()


def cmd_hilbert(job: Job) -> Dict[str, object]:
    J = Ideal(job.ring, job.sequence())
    rep = h0m_general(J, job.degree_bound)
    return {
        "hilbert": rep.hilbert.polynomial(),
        "values": rep.hilbert.as_dict(),
        "symmetric": rep.symmetric,
        "saturation_steps": rep.saturation_steps,
        "window": list(rep.window),
        "dimension": rep.dimension,
    }


def cmd_module(job: Job) -> Dict[str, object]:
    M = jacobian_module(job.sequence())
    return {
        "dim_M": M.dim,
        "hilbert": M.hilbert.polynomial(),
        "socle_degree": M.socle_degree,
        "symmetric": M.is_symmetric(),
        "saturation_steps": M.saturation_steps,
        "saturation": [format_polynomial(g) for g in M.I.gens],
        "basis": [{"degree": d, "element": format_polynomial(p)} for d, p in M.basis],
    }


def cmd_conjecture(job: Job) -> Dict[str, object]:
    rep = conjecture_check(job.sequence(), seed=job.seed)
    return {
        "module_hilbert": rep.module_hilbert.polynomial(),
        "quotient_hilbert": rep.quotient_hilbert.polynomial(),
        "socle_hilbert": rep.socle_hilbert.polynomial(),
        "hessian_degree": rep.hessian_degree,
        "hessian_in_socle": rep.hessian_in_socle,
        "hessian_nonzero": rep.hessian_nonzero,
        "dims_equal": rep.dims_equal,
        "parts": dict(rep.parts),
        "messages": list(rep.messages),
    }


def cmd_evlevine(job: Job) -> Dict[str, object]:
    form = ev_levine(job.sequence())
    return {
        "dim": form.dim,
        "basis": form.labels,
        "hessian": format_polynomial(form.h),
        "hessian_normal_form": format_polynomial(form.h_normal_form),
        "gram": [[_fr(v) for v in row] for row in form.gram],
        "inertia": [form.n_plus, form.n_minus],
        "signature": form.signature,
        "socle_ok": form.socle_ok,
    }


def cmd_branches(job: Job) -> Dict[str, object]:
    fs = job.ideal if job.ideal else [job.single()]
    return {"equations": [format_polynomial(g) for g in fs], "branches": real_branches(fs)}


def cmd_pencil(job: Job) -> Dict[str, object]:
    if len(job.ideal) != 2:
        raise UsageError("pencil needs exactly two forms: --ideal 'f;g'")
    if not job.samples:
        raise UsageError("pencil needs --samples")
    f, g = job.ideal
    rows = pencil_signature(f, g, job.samples, mode=job.mode, seed=job.seed)
    values = sorted({r.signature for r in rows if r.signature is not None})
    return {
        "samples": [{"t": _fr(r.t), "signature": r.signature, "reason": r.reason} for r in rows],
        "values": values,
        "constant": len(values) == 1,
    }


# -- plotting ----------------------------------------------------------------------


def _roots_at(g: Polynomial, x: Fraction, tol: Fraction) -> List[Fraction]:
    coeffs: Dict[int, Fraction] = {}
    for (a, b), c in g.terms.items():
        coeffs[b] = coeffs.get(b, Fraction(0)) + c * x**a
    poly = up.strip([coeffs.get(k, 0) for k in range(max(coeffs) + 1)]) if coeffs else []
    if len(poly) <= 1:
        return []
    out = []
    for r in up.isolate_roots(poly):
        while r.b - r.a > tol:
            r.refine()
        out.append((r.a + r.b) / 2)
    return out


def svg_plot(F: Polynomial, resolution: int = 40, size: int = 400) -> str:
    """SVG of the real affine curve, traced column by column over the CAD."""
    g = affine_chart(F) if F.ring.nvars == 3 else F
    if g.ring.nvars != 2:
        raise UsageError("plot needs a curve in two affine or three projective variables")
    cad = cad_plane(g)
    crit = [c.root for c in cad.critical]
    for r in crit:
        while not r.exact and r.b - r.a > Fraction(1, 1000):
            r.refine()
    span = max([Fraction(3)] + [abs(r.a) * 3 / 2 + 1 for r in crit] + [abs(r.b) * 3 / 2 + 1 for r in crit])
    edges = [-span] + [x for r in crit for x in (r.a, r.b)] + [span]
    tol = Fraction(1, 10**4)
    paths: List[List[tuple]] = []
    for lo, hi in zip(edges[::2], edges[1::2]):
        if hi <= lo:
            continue
        xs = [lo + (hi - lo) * k / resolution for k in range(resolution + 1)]
        sections: Dict[int, List[tuple]] = {}
        for x in xs:
            for k, y in enumerate(_roots_at(g, x, tol)):
                if abs(y) <= span:
                    sections.setdefault(k, []).append((x, y))
        paths.extend(sections[k] for k in sorted(sections) if len(sections[k]) > 1)
    for cell in cad.cells:
        if cell.dim == 1 and cell.y is None and cell.stack == 0 and cell.on_curve:
            x = cell.x if isinstance(cell.x, Fraction) else Fraction(cell.x.approx())
            paths.append([(x, -span), (x, span)])

    def px(v: Fraction, flip: bool) -> str:
        t = (v + span) / (2 * span) * size
        return f"{float(size - t if flip else t):.3f}"

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white" stroke="black"/>',
    ]
    for path in paths:
        pts = " ".join(f"{px(x, False)},{px(y, True)}" for x, y in path)
        lines.append(f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="1.5"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def cmd_plot(job: Job) -> Dict[str, object]:
    return {"svg": svg_plot(job.single())}


HANDLERS = {
    "signature": cmd_signature,
    "euler": cmd_euler,
    "verify": cmd_verify,
    "hilbert": cmd_hilbert,
    "module": cmd_module,
    "conjecture": cmd_conjecture,
    "evlevine": cmd_evlevine,
    "branches": cmd_branches,
    "pencil": cmd_pencil,
    "plot": cmd_plot,
}


# -- output ------------------------------------------------------------------------


def render_text(report: Dict[str, object]) -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="acis", description="Signatures of Jacobian modules and real plane curves.")
    parser.add_argument("--version", action="version", version=f"acis {__version__}")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--vars", required=True, help="comma separated variable names")
    parser.add_argument("--weights", help="comma separated positive integer weights")
    parser.add_argument("-f", help="a polynomial, e.g. 'x^2*y+z^2'")
    parser.add_argument("--ideal", help="semicolon separated generators")
    parser.add_argument("--mode", choices=("auto", "hessian", "homological"), default="auto")
    parser.add_argument("--degree-bound", type=int)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", choices=("text", "json", "svg"), default="text")
    parser.add_argument("--samples", help="comma separated rationals for pencil")
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        job = Job(args)
        if job.format == "svg" and job.command != "plot":
            raise UsageError("svg output is only available for plot")
        body = HANDLERS[job.command](job)
    except GorensteinError as exc:
        return _fail(err, EXIT_PRECONDITION, exc.reason, str(exc))
    except (EulerError, PolynomialError, UsageError, ValueError) as exc:
        return _fail(err, EXIT_PRECONDITION, type(exc).__name__, str(exc))
    except (InternalCheckError, HomologyError, AssertionError, ArithmeticError) as exc:
        return _fail(err, EXIT_INTERNAL, type(exc).__name__, str(exc))

    if job.command == "plot" and job.format == "svg":
        out.write(body["svg"])
        return EXIT_OK
    report = {**job.header(), **body}
    if job.format == "json":
        out.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    else:
        out.write(render_text(report))
    if job.command == "verify" and not report["holds"]:
        return EXIT_VERIFY
    return EXIT_OK


def _fail(err, code: int, reason: str, message: str) -> int:
    err.write(json.dumps({"error": message, "exit_code": code, "reason": reason}, sort_keys=True) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
