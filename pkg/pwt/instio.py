"""Instance files.

Two text formats are read, one is written.

Native format (written by write_instance) keeps explicit distances so
that any instance, including reduction instances with real speeds,
round-trips bit-exact:

    PROBLEM NAME: E2
    DIMENSION: 3
    NUMBER OF ITEMS: 2
    CAPACITY OF KNAPSACK: 3
    MIN SPEED: 1
    MAX SPEED: 2
    RENTING RATIO: 1
    DISTANCES
    1
    1
    ITEMS
    1 2 1 1
    2 3 2 2
    EOF

DIMENSION is the number of route cities (n+1), DISTANCES lists d_1..d_n
and each ITEMS line is "city profit weight [index]". Reals are written
with 17 significant digits.

TTP benchmark format: the same header keys plus EDGE_WEIGHT_TYPE
(CEIL_2D only), a NODE_COORD_SECTION of "index x y" lines and an
ITEMS SECTION of "index profit weight node" lines. The route visits
the nodes in index order (or in the order given by route); d_i is the
ceiling of the Euclidean distance between consecutive nodes. With
closed=True the route returns to its first node, so a file of D nodes
gives n = D; otherwise n = D - 1 and no item may sit on the last node.

SPDX-License-Identifier: Apache-2.0
"""

from dataclasses import replace
import logging
import math
import os
import re

from . import model
from . import _util
from .model import ParseError

_REQUIRED = ("DIMENSION",
             "NUMBER OF ITEMS",
             "CAPACITY OF KNAPSACK",
             "MIN SPEED",
             "MAX SPEED",
             "RENTING RATIO")

_HEADER = re.compile(r"\s*([^:]+?)\s*:\s*(.*?)\s*$")


def parse_instance(text, *, closed=False, route=None, name=None):
    """Instance from native or TTP text.

    route and closed only apply to TTP text; a route given with native
    text is a ValueError.
    """
    header, sections = _split(text)
    for key in _REQUIRED:
        if key not in header:
            raise ParseError(f"missing header key {key}")

    if "DISTANCES" in sections:
        if route is not None:
            raise ValueError("a route only applies to TTP files, "
                             "native files list their distances")

        distances, nodes_to_city = _native_route(header, sections)
        native = True
    else:
        distances, nodes_to_city = _ttp_route(header, sections,
                                              closed, route)
        native = False

    items = _items(header, sections.get("ITEMS", []), native,
                   nodes_to_city, len(distances))
    if name is None:
        name = header.get("PROBLEM NAME", ("", 0))[0]

    try:
        return model.Instance(
            distances=distances,
            items=items,
            v_min=_real(*header["MIN SPEED"]),
            v_max=_real(*header["MAX SPEED"]),
            capacity=_capacity(*header["CAPACITY OF KNAPSACK"]),
            rent=_real(*header["RENTING RATIO"]),
            name=name)
    except model.InstanceError as exc:
        raise ParseError(str(exc)) from exc


def write_instance(instance):
    """Native format text of instance."""
    lines = [f"PROBLEM NAME: {instance.name}",
             f"DIMENSION: {instance.n + 1}",
             f"NUMBER OF ITEMS: {instance.m}",
             f"CAPACITY OF KNAPSACK: {instance.capacity}",
             f"MIN SPEED: {_util.fmt_real(instance.v_min)}",
             f"MAX SPEED: {_util.fmt_real(instance.v_max)}",
             f"RENTING RATIO: {_util.fmt_real(instance.rent)}",
             "DISTANCES"]
    lines.extend(_util.fmt_real(dist) for dist in instance.distances)
    lines.append("ITEMS")
    lines.extend(f"{item.city} {_util.fmt_real(item.profit)} "
                 f"{item.weight} {item.index}"
                 for item in instance.items)
    lines.append("EOF")
    return "\n".join(lines) + "\n"


def read_instance(path, *, closed=False, route=None):
    """Parse the file at path. The name defaults to the file name
    without its extension.
    """
    with open(path, encoding="utf8") as file:
        text = file.read()

    instance = parse_instance(text, closed=closed, route=route)
    if not instance.name:
        stem = os.path.splitext(os.path.basename(path))[0]
        instance = replace(instance, name=stem)

    _logger.debug("read %s: n=%d m=%d W=%d", path, instance.n,
                  instance.m, instance.capacity)
    return instance


def write_file(path, instance):
    with open(path, "w", encoding="utf8") as file:
        file.write(write_instance(instance))


def read_route(path):
    """Node numbers listed in the file at path."""
    with open(path, encoding="utf8") as file:
        tokens = file.read().split()

    try:
        return [int(token) for token in tokens]
    except ValueError as exc:
        raise ParseError(
            f"{path}: route must list node numbers") from exc


def _split(text):
    """Header {KEY: (value, lineno)} and {SECTION: [(fields, lineno)]}.
    """
    header = {}
    sections = {}
    current = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        fields = line.split()
        if not fields:
            continue

        marker = fields[0].upper()
        if marker == "EOF":
            break

        if marker == "NODE_COORD_SECTION":
            current = sections.setdefault("NODE_COORD_SECTION", [])
            continue

        if marker in ("ITEMS", "DISTANCES"):
            current = sections.setdefault(marker, [])
            continue

        if current is None:
            match = _HEADER.match(line)
            if not match:
                raise ParseError(f"not a header line: {line.strip()!r}",
                                 lineno)

            header[match.group(1).upper()] = (match.group(2), lineno)
        else:
            current.append((fields, lineno))

    return header, sections


def _native_route(header, sections):
    dimension = _count(*header["DIMENSION"])
    distances = [_real(fields[0], lineno)
                 for fields, lineno in sections["DISTANCES"]]
    if len(distances) != dimension - 1:
        raise ParseError(f"DIMENSION {dimension} needs {dimension - 1} "
                         f"distances, found {len(distances)}")

    return distances, None


def _ttp_route(header, sections, closed, route):
    edge_type = header.get("EDGE_WEIGHT_TYPE", ("CEIL_2D", 0))
    if edge_type[0].upper() != "CEIL_2D":
        raise ParseError(
            f"EDGE_WEIGHT_TYPE {edge_type[0]} not supported",
            edge_type[1])

    dimension = _count(*header["DIMENSION"])
    coords = {}
    for fields, lineno in sections.get("NODE_COORD_SECTION", []):
        if len(fields) < 3:
            raise ParseError("node needs index x y", lineno)

        coords[_count(fields[0], lineno)] = (_real(fields[1], lineno),
                                             _real(fields[2], lineno))

    if sorted(coords) != list(range(1, dimension + 1)):
        raise ParseError(f"need coordinates for nodes 1-{dimension}")

    if route is None:
        route = list(range(1, dimension + 1))
    elif sorted(route) != list(range(1, dimension + 1)):
        raise ParseError(f"route is not a permutation of 1-{dimension}")

    stops = list(route) + [route[0]] if closed else list(route)
    distances = []
    for here, there in zip(stops, stops[1:]):
        (x_1, y_1), (x_2, y_2) = coords[here], coords[there]
        dist = math.ceil(math.hypot(x_2 - x_1, y_2 - y_1))
        if dist <= 0:
            raise ParseError(f"nodes {here} and {there} coincide")

        distances.append(dist)

    nodes_to_city = {node: city for city, node in enumerate(route, 1)}
    return distances, nodes_to_city


def _items(header, lines, native, nodes_to_city, n):
    expected = _count(*header["NUMBER OF ITEMS"], minimum=0)
    if len(lines) != expected:
        raise ParseError(f"NUMBER OF ITEMS is {expected}, "
                         f"found {len(lines)} item lines")

    items = []
    for seq, (fields, lineno) in enumerate(lines, start=1):
        if len(fields) < (3 if native else 4):
            raise ParseError("item line is too short", lineno)

        if native:
            city = _count(fields[0], lineno)
            profit = _number(fields[1], lineno)
            weight = _weight(fields[2], lineno)
            index = seq
            if len(fields) > 3:
                index = _count(fields[3], lineno)
        else:
            index = _count(fields[0], lineno)
            profit = _number(fields[1], lineno)
            weight = _weight(fields[2], lineno)
            node = _count(fields[3], lineno)
            if node not in nodes_to_city:
                raise ParseError(f"item on unknown node {node}", lineno)

            city = nodes_to_city[node]

        if city > n:
            raise ParseError(
                f"item on the last city {city} is never carried; "
                "use a closed route", lineno)

        items.append(model.Item(city=city, profit=profit,
                                weight=weight, index=index))

    return items


def _number(token, lineno):
    try:
        return int(token)
    except ValueError:
        return _real(token, lineno)


def _real(token, lineno):
    try:
        return float(token)
    except ValueError as exc:
        raise ParseError(f"{token!r} is not a number", lineno) from exc


def _count(token, lineno, minimum=1):
    try:
        value = int(token)
    except ValueError as exc:
        raise ParseError(f"{token!r} is not an integer",
                         lineno) from exc

    if value < minimum:
        raise ParseError(f"{value} is below {minimum}", lineno)

    return value


def _weight(token, lineno):
    try:
        return int(token)
    except ValueError as exc:
        raise ParseError(f"weight {token!r} is not an integer",
                         lineno) from exc


def _capacity(token, lineno):
    try:
        capacity = int(token)
    except ValueError as exc:
        raise ParseError(f"capacity {token!r} is not an integer",
                         lineno) from exc

    if capacity < 1:
        raise ParseError(f"capacity must be >= 1, got {capacity}",
                         lineno)

    return capacity


_logger = logging.getLogger("pwt.instio")
