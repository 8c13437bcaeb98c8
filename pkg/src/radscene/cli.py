"""Command line entry point.

Subcommands: project (full pipeline), anchors (print an anchor set as CSV),
simulate (write a mixture draw as CSV + spec echo), overlap (Monte Carlo
overlap map as CSV). Exit codes: 0 ok, 1 contract violation, 2 I/O failure,
64 usage error.
"""

import argparse
import json
import sys
from pathlib import Path

from . import evalsim
from .anchors import circle_anchors, sphere_anchors
from .errors import RadSceneError
from .ingest import load_kind_overrides
from .pipeline import PipelineConfig, run_project
from .radviz import _fmt

EXIT_OK = 0
EXIT_CONTRACT = 1
EXIT_IO = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser():
    parser = _Parser(prog="radscene",
                     description="3D radial visualization scenes for labeled data")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("project", parents=[], help="run the full pipeline",
                       add_help=True)
    p.add_argument("--input", required=True)
    p.add_argument("--labels", required=True, help="label column name")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--mass", type=float, default=0.90)
    p.add_argument("--method", choices=("radviz3d", "radviz2d", "viz3d"),
                   default="radviz3d")
    p.add_argument("--screen", choices=("auto", "on", "off"), default="auto")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--kinds", default=None, help="sidecar name,kind overrides file")
    p.add_argument("--out-dir", default=".")

    a = sub.add_parser("anchors", help="print an anchor set as CSV")
    a.add_argument("--p", type=int, required=True)
    a.add_argument("--scheme", choices=("sphere", "circle"), default="sphere")
    a.add_argument("--out", default=None)

    s = sub.add_parser("simulate", help="draw a labeled mixture dataset")
    s.add_argument("--spec", required=True, help="mixture spec JSON")
    s.add_argument("--out", required=True, help="output CSV path")
    s.add_argument("--discretize", type=int, default=0,
                   help="decile-discretize the first N columns")

    o = sub.add_parser("overlap", help="Monte Carlo overlap map")
    o.add_argument("--spec", required=True)
    o.add_argument("--samples", type=int, default=100_000)
    o.add_argument("--out", required=True, help="output CSV path")
    return parser


def _cmd_project(args):
    overrides = load_kind_overrides(args.kinds) if args.kinds else {}
    config = PipelineConfig(input_path=args.input, label_column=args.labels,
                            seed=args.seed, fdr_alpha=args.alpha,
                            variance_mass=args.mass, method=args.method,
                            screening=args.screen, k=args.k,
                            out_dir=args.out_dir, kind_overrides=overrides)
    paths = run_project(config)
    for name, path in paths.items():
        print(f"{name}: {path}")


def _cmd_anchors(args):
    anchors = (sphere_anchors(args.p) if args.scheme == "sphere"
               else circle_anchors(args.p))
    lines = ["j,x,y,z"]
    for j, row in enumerate(anchors.points, start=1):
        z = row[2] if len(row) > 2 else 0.0
        lines.append(f"{j},{_fmt(row[0])},{_fmt(row[1])},{_fmt(z)}")
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _write_dataset_csv(dataset, path):
    lines = [",".join(list(dataset.names) + ["group"])]
    for row, lab in zip(dataset.values, dataset.labels):
        lines.append(",".join(_fmt(x) for x in row) + f",{int(lab)}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _cmd_simulate(args):
    spec = evalsim.spec_from_json(Path(args.spec).read_text(encoding="utf-8"))
    dataset = evalsim.simulate_mixture(spec)
    if args.discretize > 0:
        dataset = evalsim.discretize_deciles(dataset, range(args.discretize))
    _write_dataset_csv(dataset, args.out)
    echo_path = Path(args.out).with_suffix(".spec.json")
    echo_path.write_text(evalsim.spec_to_json(spec), encoding="utf-8")
    print(f"dataset: {args.out}")
    print(f"spec echo: {echo_path}")


def _cmd_overlap(args):
    spec = evalsim.spec_from_json(Path(args.spec).read_text(encoding="utf-8"))
    result = evalsim.mc_overlap(spec, mc_samples=args.samples)
    G = result.pairwise.shape[0]
    lines = [",".join(f"g{j + 1}" for j in range(G))]
    for row in result.pairwise:
        lines.append(",".join(_fmt(x) for x in row))
    Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"overlap map: {args.out}")
    print(f"generalized_overlap: {_fmt(result.generalized_overlap)}")


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    handlers = {
        "project": _cmd_project,
        "anchors": _cmd_anchors,
        "simulate": _cmd_simulate,
        "overlap": _cmd_overlap,
    }
    try:
        handlers[args.command](args)
    except RadSceneError as exc:
        print(f"error [{args.command}]: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except (OSError, json.JSONDecodeError) as exc:
        print(f"i/o error [{args.command}]: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
