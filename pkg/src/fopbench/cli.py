"""fopbench: seeded experiment runner writing CSV datasets and SVG plots.

Subcommands reproduce the benchmark figures: the GMRES accuracy-floor demo,
the interpolation-basis comparison, the ultraspherical-vs-Chebyshev
condition sweep, the Hermite-FEM error/conditioning sweep, and the
mass-matrix conditioning table.  Identical configuration and seed give
byte-identical CSV files.  Exit codes: 0 success, 1 configuration error,
2 numerical failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import fem, interp, linalg, spectral
from .orthopoly import CHEBYSHEV, MONOMIAL

EPS = 2.0**-52


class ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def _format(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def write_csv(path: str, header: list[str], rows: list[tuple]) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_format(v) for v in row))
    with open(path, "w", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def _geometric_range(n_min: int, n_max: int) -> list[int]:
    if n_min < 2 or n_max < n_min:
        raise ConfigError("need 2 <= n-min <= n-max")
    ns = []
    n = n_min
    while n <= n_max:
        ns.append(n)
        n *= 2
    return ns


def _svg_path(out: str) -> str:
    return (out[:-4] if out.endswith(".csv") else out) + ".svg"


def run_gmres_demo(args) -> tuple[list[str], list[tuple], dict]:
    kappas = args.kappa or [1.0, 1e4, 1e8, 1e12]
    if not kappas:
        raise ConfigError("kappa list must be nonempty")
    n = args.n_min if args.n_min is not None else 100
    rows = []
    curves = {}
    for kappa in kappas:
        L, inv, x_true = linalg.prescribed_cond_matrix(n, kappa, args.seed)
        b = L @ x_true
        norm_x = np.linalg.norm(x_true)

        def errors(report):
            errs = [np.linalg.norm(it - x_true) / norm_x for it in report.iterates]
            # pad so every kappa covers the same iteration range
            while len(errs) < n + 1:
                errs.append(errs[-1])
            return errs

        rep_u = linalg.gmres(L, b, tol=EPS, max_iters=n, keep_iterates=True)
        rep_p = linalg.gmres(
            L, b, right_precond=inv, tol=10 * EPS * kappa, max_iters=n, keep_iterates=True
        )
        err_u = errors(rep_u)
        err_p = errors(rep_p)
        x_direct = linalg.lu_solve(L, b)
        err_d = np.linalg.norm(x_direct - x_true) / norm_x
        for it in range(n + 1):
            rows.append((kappa, it, err_u[it], err_p[it], err_d))
        curves[f"unprec k={kappa:g}"] = err_u
    header = ["kappa", "iteration", "rel_error_unprec", "rel_error_precond", "rel_error_direct"]
    figure = {
        "x": list(range(n + 1)),
        "series": curves,
        "xlabel": "iteration",
        "ylabel": "relative error",
        "title": "GMRES accuracy floor vs prescribed condition number",
        "logx": False,
    }
    return header, rows, figure


def run_interp(args) -> tuple[list[str], list[tuple], dict]:
    ns = _geometric_range(args.n_min if args.n_min is not None else 4,
                          args.n_max if args.n_max is not None else 64)
    rows = []
    for n in ns:
        res = interp.interp_experiment(n, seed=args.seed, n_draws=args.draws)
        nodes = interp.chebyshev_nodes(n)
        Lm = interp.interpolation_matrix(nodes, MONOMIAL).matrix
        Lc = interp.interpolation_matrix(nodes, CHEBYSHEV).matrix
        product = Lm @ interp.cheb_to_mono(n).T
        rows.append(
            (
                n,
                res.err_mono,
                res.err_mono_precond,
                res.err_cheb,
                linalg.cond2(Lm),
                linalg.cond2(Lc),
                linalg.cond2(product),
            )
        )
    header = ["n", "err_mono", "err_mono_precond", "err_cheb", "cond_mono", "cond_cheb", "cond_product"]
    figure = {
        "x": [r[0] for r in rows],
        "series": {
            "err monomial": [r[1] for r in rows],
            "err monomial+precond": [r[2] for r in rows],
            "err chebyshev": [r[3] for r in rows],
        },
        "xlabel": "n",
        "ylabel": "relative error",
        "title": "Interpolation: basis change vs matrix preconditioning",
        "logx": True,
    }
    return header, rows, figure


def run_spectral(args) -> tuple[list[str], list[tuple], dict]:
    ns = _geometric_range(args.n_min if args.n_min is not None else 64,
                          args.n_max if args.n_max is not None else 512)
    problem = spectral.benchmark_problem()
    ref = spectral.solve_bvp(problem, 2 * ns[-1], spectral.ULTRA).coeffs
    rows = []
    for n in ns:
        A_u = spectral.assemble_unpreconditioned(problem, n).matrix
        A_l = spectral.assemble_ultraspherical(problem, n).matrix
        r = spectral.right_diag_R(problem.order, n)
        coeffs = spectral.solve_bvp(problem, n, spectral.ULTRA).coeffs
        padded = np.zeros_like(ref)
        padded[: len(coeffs)] = coeffs
        sv = np.linalg.svd(A_u, compute_uv=False)
        rows.append(
            (
                n,
                sv[0] / sv[-1],
                linalg.cond2(A_l),
                linalg.cond2(A_l * r[None, :]),
                sv[0],
                1.0 / sv[-1],
                np.linalg.norm(padded - ref),
            )
        )
    header = ["n", "cond_unprec", "cond_ultra", "cond_ultraR", "norm_A", "norm_Ainv", "err_vs_reference"]
    figure = {
        "x": [r[0] for r in rows],
        "series": {
            "cond chebyshev": [r[1] for r in rows],
            "cond ultraspherical": [r[2] for r in rows],
            "cond ultraspherical+R": [r[3] for r in rows],
        },
        "xlabel": "n",
        "ylabel": "condition number",
        "title": "Spectral discretization conditioning",
        "logx": True,
    }
    return header, rows, figure


def run_fem(args) -> tuple[list[str], list[tuple], dict]:
    ns = _geometric_range(args.n_min if args.n_min is not None else 16,
                          args.n_max if args.n_max is not None else 256)
    if args.problem == "L2":
        problem = fem.oscillatory_problem(args.alpha)
    else:
        problem = fem.biharmonic_problem()
    rows = []
    for n in ns:
        mesh = fem.UniformMesh(n)
        L_u, _ = fem.assemble_galerkin(problem, mesh)
        L_f, _ = fem.assemble_fop(problem, mesh)
        _, rep_u = fem.solve_unpreconditioned(problem, mesh)
        _, rep_f = fem.solve_fop(problem, mesh)
        rep_m = fem.matrix_precond_baseline(problem, mesh)
        rows.append(
            (
                n,
                linalg.cond2(L_u),
                linalg.cond2(L_f),
                rep_u.rel_H2,
                rep_u.rel_L2,
                rep_m.rel_L2,
                rep_f.rel_L2,
            )
        )
    header = ["n", "cond_unprec", "cond_fop", "relH2_unprec", "relL2_unprec", "relL2_matrixprec", "relL2_fop"]
    figure = {
        "x": [r[0] for r in rows],
        "series": {
            "L2 err unprec": [r[4] for r in rows],
            "L2 err matrix-precond": [r[5] for r in rows],
            "L2 err operator-precond": [r[6] for r in rows],
        },
        "xlabel": "n",
        "ylabel": "relative error",
        "title": f"Hermite FEM errors ({args.problem})",
        "logx": True,
    }
    return header, rows, figure


def run_mass_cond(args) -> tuple[list[str], list[tuple], dict]:
    ns = _geometric_range(args.n_min if args.n_min is not None else 4,
                          args.n_max if args.n_max is not None else 1024)
    rows = []
    for n in ns:
        M = fem.mass_matrix(fem.UniformMesh(n))
        ev = np.linalg.eigvalsh(fem.mass_rescaled(fem.UniformMesh(n)))
        rows.append((n, linalg.cond2(M), ev[0], ev[-1]))
    header = ["n", "cond_mass", "lambda_min_rescaled", "lambda_max_rescaled"]
    figure = {
        "x": [r[0] for r in rows],
        "series": {"cond(M)": [r[1] for r in rows]},
        "xlabel": "n",
        "ylabel": "condition number",
        "title": "Hermite mass-matrix conditioning",
        "logx": True,
    }
    return header, rows, figure


RUNNERS = {
    "gmres-demo": run_gmres_demo,
    "interp": run_interp,
    "spectral": run_spectral,
    "fem": run_fem,
    "mass-cond": run_mass_cond,
}


def build_parser() -> _Parser:
    parser = _Parser(prog="fopbench", description=__doc__)
    parser.add_argument("experiment", choices=sorted(RUNNERS))
    parser.add_argument("--n-min", type=int, default=None,
                        help="smallest size (gmres-demo: the matrix size, default 100)")
    parser.add_argument("--n-max", type=int, default=None,
                        help="largest size; the sweep doubles from n-min")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", required=True, help="output CSV path")
    parser.add_argument("--problem", choices=["biharmonic", "L2"], default="biharmonic")
    parser.add_argument("--alpha", type=float, default=200.0)
    parser.add_argument("--kappa", type=lambda s: [float(t) for t in s.split(",")],
                        default=None, help="comma-separated condition numbers")
    parser.add_argument("--draws", type=int, default=100,
                        help="random draws per size in the interp experiment")
    parser.add_argument("--svg", action="store_true",
                        help="also render a log-scale SVG plot next to the CSV")
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except ConfigError as exc:
        print(f"fopbench: configuration error: {exc}", file=sys.stderr)
        return 1
    try:
        header, rows, figure = RUNNERS[args.experiment](args)
    except (ConfigError, linalg.InvalidKappaError) as exc:
        print(f"fopbench: configuration error: {exc}", file=sys.stderr)
        return 1
    except (
        linalg.SingularMatrixError,
        spectral.SingularSystemError,
        FloatingPointError,
        np.linalg.LinAlgError,
    ) as exc:
        print(f"fopbench: numerical failure: {exc}", file=sys.stderr)
        return 2
    try:
        write_csv(args.out, header, rows)
        if args.svg:
            from .plotting import line_figure

            line_figure(
                _svg_path(args.out),
                figure["x"],
                figure["series"],
                figure["xlabel"],
                figure["ylabel"],
                figure["title"],
                logx=figure["logx"],
            )
    except OSError as exc:
        print(f"fopbench: configuration error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
