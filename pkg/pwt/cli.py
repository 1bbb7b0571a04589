"""pwt command

Sub-commands:
    solve       solve one instance with dp, fptas or brute
    bench       run a benchmark manifest and write a CSV table
    generate    write generated instances
    reduce-ssp  write the instance a subset-sum reduction builds
    fcurve      write w,f(w) samples of a reduction curve

Exit status is 0 on success, 1 for usage errors (including bad option
values) and 2 for input errors (unreadable or malformed files, oracle
limit, manifest errors).

Environment variables used:
    PWT_LOGGING
    PWT_BRUTE_LIMIT
    PWT_WORKERS

SPDX-License-Identifier: Apache-2.0
"""

from argparse import ArgumentParser, ArgumentTypeError
from contextlib import nullcontext
import csv
import logging
import os
import sys

from . import __version__
from . import bench
from . import fptas
from . import generate
from . import hardness
from . import instio
from . import model
from . import _util


class PwtArgumentParser(ArgumentParser):
    """ArgumentParser that exits with status 1 on usage errors.
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def main(argv=None):
    """Process pwt command. Returns the exit status.
    """
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code or 0

    try:
        _util.log_check()
        return args.func(args)
    except (model.PwtError, OSError, UnicodeDecodeError) as exc:
        print(f"pwt: {exc}", file=sys.stderr)
        _logger.warning("%s failed: %s", args.command, exc)
        return 2
    except ValueError as exc:
        print(f"pwt: {exc}", file=sys.stderr)
        return 1


def cmd_solve(args):
    if args.algo == "fptas":
        if args.eps is None:
            raise ValueError("fptas requires --eps")
    elif args.eps is not None:
        raise ValueError(f"{args.algo} takes no --eps")

    if args.eps is not None:
        fptas.check_epsilon(args.eps)

    route = instio.read_route(args.route) if args.route else None
    instance = instio.read_instance(args.instance,
                                    closed=args.closed,
                                    route=route)
    solution, record = bench.run_cell(instance, args.algo, args.eps)
    evaluation = solution.evaluation
    indices = solution.selection.item_indices(instance)

    print(f"instance: {instance.name}")
    print(f"algorithm: {record.tag}")
    print(f"B: {_util.fmt_fixed(evaluation.benefit)}")
    print(f"B': {_util.fmt_fixed(evaluation.gain)}")
    print(f"items: {' '.join(str(idx) for idx in indices)}".rstrip())
    print(f"seconds: {_util.fmt_fixed(record.seconds, 6)}")

    if args.out:
        bench.fill_ratios([record])
        header = (not os.path.exists(args.out)
                  or os.path.getsize(args.out) == 0)
        with open(args.out, "a", encoding="utf8", newline="") as file:
            bench.write_csv([record], file, header=header)

    return 0


def cmd_bench(args):
    instances, algorithms, workers = bench.load_manifest(args.manifest)
    if args.workers is not None:
        workers = args.workers

    records = bench.run(instances, algorithms, workers)
    with _output(args.out) as file:
        bench.write_csv(records, file)

    return 0


def cmd_generate(args):
    if args.grid:
        if not args.outdir:
            raise ValueError("--grid requires --outdir")

        os.makedirs(args.outdir, exist_ok=True)
        for spec in generate.corpus(args.grid, seed=args.seed):
            instance = generate.generate(spec)
            path = os.path.join(args.outdir, f"{instance.name}.pwt")
            instio.write_file(path, instance)
            _logger.info("wrote %s", path)

        return 0

    spec = generate.GeneratorSpec(family=args.family,
                                  m=args.m,
                                  value_range=args.value_range,
                                  capacity_class=args.capacity_class,
                                  assignment=args.assignment,
                                  per_city=args.per_city,
                                  cities=args.cities,
                                  seed=args.seed,
                                  rent=args.rent,
                                  name=args.name or "")
    instance = generate.generate(spec)
    if args.outdir:
        os.makedirs(args.outdir, exist_ok=True)
        path = os.path.join(args.outdir, f"{instance.name}.pwt")
        instio.write_file(path, instance)
        return 0

    with _output(args.out) as file:
        file.write(instio.write_instance(instance))

    return 0


def cmd_reduce(args):
    ssp = hardness.SspInstance(args.values, args.target)
    instance = hardness.reduce(args.variant, ssp)
    with _output(args.out) as file:
        file.write(instio.write_instance(instance))

    return 0


def cmd_fcurve(args):
    if args.points is not None and args.points < 2:
        raise ValueError("--points must be at least 2")

    ssp = hardness.SspInstance(args.values, args.target)
    points = hardness.curve_points(args.variant, ssp, args.points)
    with _output(args.out) as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(("w", "f"))
        for weight, value in points:
            writer.writerow((_util.fmt_real(weight),
                             _util.fmt_real(value)))

    return 0


# Private functions


def _parser():
    parser = PwtArgumentParser(
        prog="pwt",
        description="Packing While Traveling solvers",
        add_help=True)
    if __version__:
        parser.add_argument("--version",
                            action="version",
                            version=f"%(prog)s {__version__}")

    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    solve = commands.add_parser("solve", help="solve one instance")
    solve.add_argument("--instance", required=True,
                       help="instance file (native or TTP)")
    solve.add_argument("--algo", required=True,
                       choices=bench.ALGORITHMS,
                       help="solver to run")
    solve.add_argument("--eps", type=float,
                       help="approximation parameter for fptas")
    solve.add_argument("--closed", action="store_true",
                       help="TTP file: tour returns to its first node")
    solve.add_argument("--route",
                       help="file listing the TTP nodes in route order "
                            "(TTP files only)")
    solve.add_argument("--out",
                       help="CSV file to append a result row to")
    solve.set_defaults(func=cmd_solve)

    bench_cmd = commands.add_parser("bench",
                                    help="run a benchmark manifest")
    bench_cmd.add_argument("--manifest", required=True,
                           help="JSON manifest")
    bench_cmd.add_argument("--workers", type=int,
                           help="worker processes")
    bench_cmd.add_argument("--out", help="CSV file (default stdout)")
    bench_cmd.set_defaults(func=cmd_bench)

    gen = commands.add_parser("generate", help="write instances")
    gen.add_argument("--grid", choices=("small-range", "large-range"),
                     help="write a whole experiment grid to --outdir")
    gen.add_argument("--family", default="uncorrelated",
                     help="knapsack family, long name or tag")
    gen.add_argument("--m", type=int, default=100,
                     help="number of items")
    gen.add_argument("--range", dest="value_range", type=_value_range,
                     default=generate.SMALL_RANGE, metavar="LO,HI",
                     help="profit and weight range")
    gen.add_argument("--class", dest="capacity_class", type=int,
                     default=1, help="capacity class 1-10")
    gen.add_argument("--assignment", default=generate.ROUND_ROBIN,
                     choices=(generate.ROUND_ROBIN,
                              generate.PROFIT_SORTED))
    gen.add_argument("--per-city", type=int, default=1,
                     help="items per city for profit-sorted assignment")
    gen.add_argument("--cities", type=int, default=101)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--rent", type=float,
                     help="renting ratio (default derived)")
    gen.add_argument("--name")
    gen.add_argument("--outdir", help="directory for NAME.pwt files")
    gen.add_argument("--out", help="file (default stdout)")
    gen.set_defaults(func=cmd_generate)

    for name, func, text in (
            ("reduce-ssp", cmd_reduce, "write a reduction instance"),
            ("fcurve", cmd_fcurve, "write reduction curve samples")):
        sub = commands.add_parser(name, help=text)
        sub.add_argument("--values", required=True, type=_values,
                         metavar="S1,S2,...",
                         help="subset-sum values")
        sub.add_argument("--target", required=True, type=int)
        sub.add_argument("--variant", default=hardness.CAPACITATED,
                         choices=(hardness.CAPACITATED,
                                  hardness.UNCONSTRAINED))
        if name == "fcurve":
            sub.add_argument("--points", type=int,
                             help="evenly spaced reals instead of "
                                  "integer weights")

        sub.add_argument("--out", help="file (default stdout)")
        sub.set_defaults(func=func)

    return parser


def _values(text):
    try:
        return tuple(int(value) for value in text.split(","))
    except ValueError as exc:
        raise ArgumentTypeError(f"{text!r} is not a list of "
                                "integers") from exc


def _value_range(text):
    values = _values(text)
    if len(values) != 2:
        raise ArgumentTypeError(f"{text!r} is not LO,HI")

    return values


def _output(path):
    if path is None or path == "-":
        return nullcontext(sys.stdout)

    return open(path, "w", encoding="utf8", newline="")


_logger = logging.getLogger("pwt.cli")

if __name__ == "__main__":
    raise SystemExit(main())
