"""Benchmark harness.

Runs solvers over instances and collects one RunRecord per
(instance, algorithm) cell. Approximation rates are filled in from
the dp cell of the same instance:

    AR(%) = 100 * OBJ / OPT

for B (as reported in the literature) and for B' (the objective the
approximation scheme guarantees).

A manifest is a JSON document:

    {
        "instances": [
            "uncorr_01_m100.pwt",
            {"path": "eil101_n100_uncorr_01.ttp", "closed": true},
            {"generate": {"family": "m-s-corr", "m": 100,
                          "value_range": [1, 10000000], "seed": 3}}
        ],
        "algorithms": ["dp", "fptas:0.1", "fptas:0.75"],
        "workers": 1
    }

Paths are relative to the manifest. Only solver time is measured.

Environment variables used:
    PWT_WORKERS

SPDX-License-Identifier: Apache-2.0
"""

from concurrent.futures import ProcessPoolExecutor
import csv
from dataclasses import dataclass, replace
import json
import logging
import os
import time

from . import dp
from . import fptas
from . import generate
from . import instio
from . import model
from . import _util

COLUMNS = ("instance", "m", "algo", "eps", "B", "Bprime",
           "AR_B", "AR_Bprime", "seconds", "peak_entries")

ALGORITHMS = ("dp", "fptas", "brute")


@dataclass
class RunRecord:
    """One row of a result table."""

    instance: str
    m: int
    algo: str
    eps: float
    benefit: float
    gain: float
    seconds: float
    peak_entries: int = None
    ar_benefit: float = None
    ar_gain: float = None

    @property
    def tag(self):
        if self.eps is None:
            return self.algo

        return f"{self.algo}({self.eps:g})"

    def row(self):
        return [self.instance,
                str(self.m),
                self.algo,
                "" if self.eps is None else f"{self.eps:g}",
                _util.fmt_fixed(self.benefit),
                _util.fmt_fixed(self.gain),
                _util.fmt_fixed(self.ar_benefit),
                _util.fmt_fixed(self.ar_gain),
                _util.fmt_fixed(self.seconds, 6),
                _count(self.peak_entries)]


def parse_algo(text):
    """("dp", None), ("brute", None) or ("fptas", eps) from
    "dp", "brute" or "fptas:eps".
    """
    name, _, eps = text.partition(":")
    if name not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {name!r}")

    if name != "fptas":
        if eps:
            raise ValueError(f"{name} takes no eps")

        return name, None

    if not eps:
        raise ValueError("fptas requires eps")

    try:
        eps = float(eps)
    except ValueError as exc:
        raise ValueError(f"eps {eps!r} is not a number") from exc

    fptas.check_epsilon(eps)
    return name, eps


def solve(instance, algo, eps=None):
    """Run one solver; returns a dp.Solution."""
    if algo == "dp":
        return dp.dp_solve(instance)

    if algo == "fptas":
        if eps is None:
            raise ValueError("fptas requires eps")

        return fptas.fptas_solve(instance, eps)

    if algo == "brute":
        selection, evaluation = model.brute_force(instance)
        return dp.Solution(selection=selection,
                           evaluation=evaluation,
                           algo="brute",
                           value=evaluation.benefit)

    raise ValueError(f"unknown algorithm {algo!r}")


def run_cell(instance, algo, eps=None):
    """Solve and time one cell."""
    started = time.perf_counter()
    solution = solve(instance, algo, eps)
    seconds = time.perf_counter() - started
    return solution, RunRecord(instance=instance.name,
                               m=instance.m,
                               algo=algo,
                               eps=eps,
                               benefit=solution.evaluation.benefit,
                               gain=solution.evaluation.gain,
                               seconds=seconds,
                               peak_entries=solution.peak)


def fill_ratios(records):
    """Set the AR columns from the dp record of each instance."""
    optimum = {}
    for record in records:
        if record.algo == "dp":
            optimum[record.instance] = (record.benefit, record.gain)

    for record in records:
        if record.instance not in optimum:
            continue

        opt_benefit, opt_gain = optimum[record.instance]
        if opt_benefit:
            record.ar_benefit = 100 * record.benefit / opt_benefit

        if opt_gain:
            record.ar_gain = 100 * record.gain / opt_gain

    return records


def load_manifest(path):
    """(instances, algorithms, workers) from a manifest file.

    instances are loaded (or generated) here; algorithms is a list of
    (name, eps) pairs.
    """
    try:
        with open(path, encoding="utf8") as file:
            manifest = json.load(file)
    except json.JSONDecodeError as exc:
        raise ManifestError(f"{path}: {exc}") from exc

    if not isinstance(manifest, dict):
        raise ManifestError(f"{path}: manifest must be an object")

    base = os.path.dirname(os.path.abspath(path))
    try:
        algorithms = [parse_algo(text)
                      for text in manifest.get("algorithms", ["dp"])]
    except ValueError as exc:
        raise ManifestError(f"{path}: {exc}") from exc

    instances = [_manifest_instance(entry, base)
                 for entry in manifest.get("instances", [])]
    workers = manifest.get("workers")
    if workers is not None and (not isinstance(workers, int)
                                or isinstance(workers, bool)
                                or workers < 1):
        raise ManifestError(
            f"{path}: workers must be a positive integer, "
            f"got {workers!r}")

    return instances, algorithms, workers


def run(instances, algorithms, workers=None):
    """RunRecords for every instance and algorithm, in that order.

    With more than one worker the cells run in separate processes;
    each cell is still timed on its own.
    """
    if workers is None:
        workers = _util.env_int("PWT_WORKERS", 1)

    cells = [(instance, algo, eps)
             for instance in instances
             for algo, eps in algorithms]
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_record_cell, *cell)
                       for cell in cells]
            records = [future.result() for future in futures]
    else:
        records = [_record_cell(*cell) for cell in cells]

    width = len(algorithms)
    for start in range(0, len(records), width or 1):
        fill_ratios(records[start:start + width])

    return records


def write_csv(records, stream, header=True):
    writer = csv.writer(stream, lineterminator="\n")
    if header:
        writer.writerow(COLUMNS)

    for record in records:
        writer.writerow(record.row())


def _count(value):
    return "" if value is None else str(value)


def _record_cell(instance, algo, eps):
    _, record = run_cell(instance, algo, eps)
    _logger.info("%s %s: B=%r in %.3fs", record.instance, record.tag,
                 record.benefit, record.seconds)
    return record


def _manifest_instance(entry, base):
    if isinstance(entry, str):
        entry = {"path": entry}

    if not isinstance(entry, dict):
        raise ManifestError(f"bad instance entry {entry!r}")

    if "generate" in entry:
        params = dict(entry["generate"])
        if "value_range" in params:
            params["value_range"] = tuple(params["value_range"])

        try:
            return generate.generate(generate.GeneratorSpec(**params))
        except (TypeError, ValueError) as exc:
            raise ManifestError(f"bad generator entry: {exc}") from exc

    if "path" not in entry:
        raise ManifestError(f"instance entry without path: {entry!r}")

    path = os.path.join(base, entry["path"])
    route = entry.get("route")
    if isinstance(route, str):
        route = instio.read_route(os.path.join(base, route))

    try:
        instance = instio.read_instance(
            path, closed=bool(entry.get("closed")), route=route)
    except ValueError as exc:
        raise ManifestError(f"{entry['path']}: {exc}") from exc

    if entry.get("name"):
        instance = replace(instance, name=entry["name"])

    return instance


class ManifestError(model.PwtError):
    """Bad benchmark manifest.
    """


_logger = logging.getLogger("pwt.bench")
