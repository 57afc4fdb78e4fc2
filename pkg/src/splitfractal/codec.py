"""JSON encodings for points, basic sets, families, clouds, systems and reports.

Rationals are always ``"p/q"`` strings, keys are sorted, and lists come out in
canonical order, so equal values serialize to identical bytes.
"""
import json
from fractions import Fraction

from .algebra import EUCLID_INTERVAL, EUCLID_SQUARE, SPACES, SPLIT_INTERVAL, SPLIT_SQUARE, Family, canonicalize, dimension
from .carpet import CarpetApprox
from .errors import PreconditionError
from .exact import AffineMap, as_rational, format_rational
from .ifs import Ifs, IfsMap, PointCloud
from .spaces import BasicInterval, BasicSquare, QuadPoint, SplitPoint
from .verify import ConvergenceReport


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def _r(value) -> Fraction:
    if not isinstance(value, str):
        raise PreconditionError(f"rationals are encoded as 'p/q' strings, got {value!r}")
    return as_rational(value)


# -- points -------------------------------------------------------------------------

def point_space(point) -> str:
    if isinstance(point, QuadPoint):
        return SPLIT_SQUARE
    if isinstance(point, SplitPoint):
        return SPLIT_INTERVAL
    if isinstance(point, tuple):
        return EUCLID_SQUARE
    return EUCLID_INTERVAL


def point_to_json(point) -> dict:
    if isinstance(point, QuadPoint):
        return {"x": format_rational(point.x), "y": format_rational(point.y), "t": point.t}
    if isinstance(point, SplitPoint):
        return {"x": format_rational(point.x), "side": point.side}
    if isinstance(point, tuple):
        return {"x": format_rational(point[0]), "y": format_rational(point[1])}
    return {"x": format_rational(point)}


def point_from_json(obj: dict):
    if not isinstance(obj, dict) or "x" not in obj:
        raise PreconditionError(f"not a point encoding: {obj!r}")
    if "t" in obj:
        return QuadPoint(_r(obj["x"]), _r(obj["y"]), int(obj["t"]))
    if "side" in obj:
        return SplitPoint(_r(obj["x"]), int(obj["side"]))
    if "y" in obj:
        return _r(obj["x"]), _r(obj["y"])
    return _r(obj["x"])


# -- basic sets and families -----------------------------------------------------

def piece_to_json(piece) -> dict:
    keys = "abcd" if isinstance(piece, BasicSquare) else "ab"
    return {k: format_rational(getattr(piece, k)) for k in keys}


def piece_from_json(obj: dict):
    if not isinstance(obj, dict):
        raise PreconditionError(f"not a basic-set encoding: {obj!r}")
    if set(obj) == {"a", "b", "c", "d"}:
        return BasicSquare(*(_r(obj[k]) for k in "abcd"))
    if set(obj) == {"a", "b"}:
        return BasicInterval(_r(obj["a"]), _r(obj["b"]))
    raise PreconditionError(f"not a basic-set encoding: {obj!r}")


def family_to_json(F: Family) -> dict:
    return {"space": F.space, "pieces": [piece_to_json(p) for p in F.pieces]}


def carpet_to_json(approx: CarpetApprox) -> dict:
    """A carpet approximant as its ``8**level`` level cells plus the level."""
    cells = approx.cells.uniform_cells(approx.level, 3)
    return {"space": approx.cells.space, "level": approx.level,
            "pieces": [piece_to_json(p) for p in sorted(cells)]}


def family_from_json(obj: dict) -> Family:
    if not isinstance(obj, dict) or "pieces" not in obj or obj.get("space") not in SPACES:
        raise PreconditionError("family JSON needs 'space' and 'pieces'")
    pieces = [piece_from_json(p) for p in obj["pieces"]]
    return canonicalize(pieces, space=obj["space"])


def family_pieces_from_json(obj: dict):
    """The pieces exactly as listed (no canonicalization), with the space."""
    family_from_json(obj)   # validation only
    return obj["space"], [piece_from_json(p) for p in obj["pieces"]]


# -- clouds ------------------------------------------------------------------------------

def cloud_to_json(K: PointCloud) -> dict:
    return {"space": K.space, "points": [point_to_json(p) for p in K.sorted()]}


def cloud_from_json(obj: dict) -> PointCloud:
    points = [point_from_json(p) for p in obj["points"]]
    spaces = {point_space(p) for p in points}
    if spaces - {obj["space"]}:
        raise PreconditionError("cloud points do not match the declared space")
    return PointCloud(obj["space"], frozenset(points))


# -- systems --------------------------------------------------------------------------------

def _map_from_json(obj):
    return AffineMap(_r(obj["slope"]), _r(obj["offset"]))


def ifs_from_json(obj) -> Ifs:
    """A custom system: ``{"space": ..., "maps": [[{"slope", "offset"}, ...], ...]}``.

    A bare list of maps is accepted and taken to act on a split space.  Each
    map lists one ``{slope, offset}`` pair per coordinate.
    """
    if isinstance(obj, list):
        obj = {"maps": obj}
    maps = obj.get("maps")
    if not maps:
        raise PreconditionError("custom IFS needs a nonempty 'maps' list")
    coords = {len(m) for m in maps}
    if len(coords) != 1 or coords.pop() not in (1, 2):
        raise PreconditionError("every map needs 1 or 2 coordinate maps, consistently")
    dim = len(maps[0])
    space = obj.get("space", SPLIT_INTERVAL if dim == 1 else SPLIT_SQUARE)
    if space not in SPACES or dimension(space) != dim:
        raise PreconditionError(f"space {space!r} does not fit {dim}-coordinate maps")
    out = []
    for m in maps:
        gx = _map_from_json(m[0])
        gy = _map_from_json(m[1]) if dim == 2 else None
        out.append(IfsMap(gx, gy, space))
    return Ifs(tuple(out), obj.get("name", "custom"), obj.get("attractor"))


# -- reports --------------------------------------------------------------------------------

def _cell_to_json(cell):
    return piece_to_json(cell)


def report_to_json(report: ConvergenceReport) -> dict:
    hits = sorted(report.per_cell_first_hit.items(), key=lambda kv: kv[0])
    return {
        "system": report.system,
        "grid_level": report.grid_level,
        "horizon": report.horizon,
        "n0": report.n0,
        "verdict": report.verdict,
        "first_hits": [{"cell": _cell_to_json(c), "n": n} for c, n in hits],
        "seeds": [point_to_json(s) for s in report.seeds],
        "upper_ok": report.upper_ok,
        "fixed_point_ok": report.fixed_point_ok,
    }
