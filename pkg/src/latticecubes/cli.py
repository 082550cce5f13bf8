"""Command-line front end: ``latticecubes <command> ...``.

Results go to standard output as compact JSON (or CSV where a table makes
sense); diagnostics go to standard error.  Exit codes: 0 ok, 1 validation
failure or unmet check, 2 usage error.
"""

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass

from .errors import LatticeError, SearchBudgetExceeded

OK = "ok"
VALIDATION_ERROR = "validation-error"
NOT_FOUND = "not-found"
INTERNAL = "internal"
USAGE = "usage"

_EXIT = {OK: 0, VALIDATION_ERROR: 1, NOT_FOUND: 1, INTERNAL: 1, USAGE: 2}


@dataclass
class CommandResult:
    status: str
    payload: dict
    text: str = None  # preformatted output (CSV); JSON is rendered from payload otherwise

    @property
    def exit_code(self):
        return _EXIT[self.status]

    def render(self):
        if self.text is not None:
            return self.text
        return dumps(self.payload) + "\n"


class UsageError(Exception):
    pass


def dumps(obj):
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


def int_vector(text):
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer vector {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty vector")
    return values


def quaternion_arg(text):
    values = int_vector(text)
    if len(values) != 4:
        raise argparse.ArgumentTypeError(f"a quaternion needs four integers x,y,z,t, got {text!r}")
    return values


def triple_arg(text):
    values = int_vector(text)
    if len(values) != 3:
        raise argparse.ArgumentTypeError(f"expected three integers, got {text!r}")
    return values


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # treat "-1,2,-3" as a value, not an option
        self._negative_number_matcher = re.compile(r"^-\d[\d,-]*$")

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser():
    p = _Parser(prog="latticecubes", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("json", "csv"), default="json")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pair_args(sp):
        sp.add_argument("--u", type=int_vector, required=True)
        sp.add_argument("--v", type=int_vector, required=True)

    def frame_args(sp, rows):
        sp.add_argument("--row", type=int_vector, action="append", required=True,
                        help=f"frame row; give it {rows} times")

    eh = sub.add_parser("ehrhart").add_subparsers(dest="shape", required=True, parser_class=_Parser)
    pair_args(eh.add_parser("square"))
    sp = eh.add_parser("cube")
    frame_args(sp, 3)
    sp.add_argument("--r4", type=int_vector, help="completing row for a cube in Z^4")
    sp.add_argument("--allow-even", action="store_true")
    frame_args(eh.add_parser("hypercube"), 4)

    co = sub.add_parser("construct").add_subparsers(dest="kind", required=True, parser_class=_Parser)
    for name in ("param3d", "param4d", "double"):
        co.add_parser(name).add_argument("--params", type=quaternion_arg, required=True)
    sp = co.add_parser("from-quaternions")
    sp.add_argument("--q1", type=quaternion_arg, required=True)
    sp.add_argument("--q2", type=quaternion_arg, required=True)
    sp.add_argument("--hypercube", action="store_true", help="emit the four-row frame instead of the square")
    sp = co.add_parser("min-square")
    sp.add_argument("--u", type=int_vector)
    sp.add_argument("--v", type=int_vector)
    sp.add_argument("--k", type=int)
    sp.add_argument("--rep1", type=triple_arg)
    sp.add_argument("--rep2", type=triple_arg)
    sp.add_argument("--budget", type=int)

    pl = sub.add_parser("plane").add_subparsers(dest="kind", required=True, parser_class=_Parser)
    pair_args(pl.add_parser("from-pair"))
    sp = pl.add_parser("from-reps")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--rep1", type=triple_arg, required=True)
    sp.add_argument("--rep2", type=triple_arg, required=True)

    ve = sub.add_parser("verify").add_subparsers(dest="shape", required=True, parser_class=_Parser)
    sp = ve.add_parser("square")
    pair_args(sp)
    sp.add_argument("--t-max", type=int, default=3)
    sp = ve.add_parser("cube")
    frame_args(sp, 3)
    sp.add_argument("--r4", type=int_vector)
    sp.add_argument("--allow-even", action="store_true")
    sp.add_argument("--t-max", type=int, default=4)
    sp = ve.add_parser("hypercube")
    frame_args(sp, 4)
    sp.add_argument("--t-max", type=int, default=5)
    sp = ve.add_parser("prop21")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--t-max", type=int, default=1)
    sp = ve.add_parser("corpus")
    sp.add_argument("--t-max", type=int, default=5)

    sp = sub.add_parser("aps")
    sp.add_argument("--dim", type=int, choices=(2, 3, 4), default=2)
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--coord-bound", type=int, default=6)
    sp.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)

    sp = sub.add_parser("quadruples")
    sp.add_argument("--ell-max", type=int, required=True)
    sp.add_argument("--ell-min", type=int, default=1)
    sp.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)

    sp = sub.add_parser("search-k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--budget", type=int, default=200_000)
    return p


# command implementations -----------------------------------------------------


def _ehrhart(args):
    from .cubes import ehrhart_cube_3d, ehrhart_cube_in_4d, ehrhart_hypercube, validate_frame
    from .squares import ehrhart_square_generic, validate_twin

    if args.shape == "square":
        return ehrhart_square_generic(validate_twin(args.u, args.v)).poly.to_dict()
    frame = validate_frame(args.row)
    if args.shape == "cube":
        if frame.dim == 4:
            if args.r4 is None:
                raise UsageError("a cube in Z^4 needs --r4")
            return ehrhart_cube_in_4d(frame, args.r4).poly.to_dict()
        return ehrhart_cube_3d(frame, allow_even=args.allow_even).poly.to_dict()
    return ehrhart_hypercube(frame).poly.to_dict()


def _with_poly(pair):
    from .squares import ehrhart_square_generic

    out = pair.to_dict()
    out["poly"] = list(ehrhart_square_generic(pair).poly.coeffs)
    return out


def _construct(args):
    from .cubes import ehrhart_hypercube, hypercube_from_quaternions, validate_frame
    from .planes import minimal_square_in_plane, plane_data_from_pair, plane_from_representations
    from .quaternions import square_from_quaternion_pair
    from .squares import double_square_4d, param_normal_3d, param_square_3d, pseudo_orthogonal_matrix

    if args.kind == "param3d":
        out = _with_poly(param_square_3d(*args.params))
        out["normal"] = list(param_normal_3d(*args.params))
        return out
    if args.kind == "param4d":
        frame = validate_frame(pseudo_orthogonal_matrix(*args.params), sort=False)
        out = frame.to_dict()
        if frame.irreducible:
            out["poly"] = list(ehrhart_hypercube(frame).poly.coeffs)
        return out
    if args.kind == "double":
        return _with_poly(double_square_4d(*args.params))
    if args.kind == "from-quaternions":
        if args.hypercube:
            frame = hypercube_from_quaternions(args.q1, args.q2, sort=False)
            out = frame.to_dict()
            if frame.irreducible:
                out["poly"] = list(ehrhart_hypercube(frame).poly.coeffs)
            return out
        return _with_poly(square_from_quaternion_pair(args.q1, args.q2))
    # min-square
    if args.u is not None and args.v is not None:
        plane = plane_data_from_pair(args.u, args.v)
    elif args.k is not None and args.rep1 and args.rep2:
        plane = plane_from_representations(args.k, args.rep1, args.rep2)
    else:
        raise UsageError("min-square needs --u/--v or --k/--rep1/--rep2")
    return _with_poly(minimal_square_in_plane(plane, budget=args.budget))


def _plane(args):
    from .planes import plane_data_from_pair, plane_from_representations, sublattice_basis

    if args.kind == "from-pair":
        plane = plane_data_from_pair(args.u, args.v)
    else:
        plane = plane_from_representations(args.k, args.rep1, args.rep2)
    out = plane.to_dict()
    if not plane.three_dimensional:
        sub = sublattice_basis(plane)
        out["basis"] = [list(b) for b in sub.basis]
        out["fundamental_volume"] = sub.fundamental_volume
    return out


def _oracle_report(shape, formula, degree, t_max):
    from .oracle import count_shape, fit_ehrhart

    t_max = max(t_max, degree + 1)
    fitted = fit_ehrhart(shape, degree)
    counts = [count_shape(shape, t) for t in range(1, t_max + 1)]
    predicted = [formula(t) for t in range(1, t_max + 1)]
    ok = fitted == formula and counts == predicted
    report = {
        "ok": ok,
        "formula": list(formula.coeffs),
        "oracle": list(fitted.coeffs),
        "counts": counts,
    }
    return report, ok


def _verify(args):
    from .cubes import CORPUS, ehrhart_cube_3d, ehrhart_cube_in_4d, ehrhart_hypercube, validate_frame
    from .oracle import corner_count_direct
    from .squares import ehrhart_square_generic, validate_twin

    if args.shape == "square":
        pair = validate_twin(args.u, args.v)
        return _oracle_report(pair, ehrhart_square_generic(pair).poly, 2, args.t_max)
    if args.shape == "cube":
        frame = validate_frame(args.row)
        if frame.dim == 4:
            if args.r4 is None:
                raise UsageError("a cube in Z^4 needs --r4")
            poly = ehrhart_cube_in_4d(frame, args.r4).poly
        else:
            poly = ehrhart_cube_3d(frame, allow_even=args.allow_even).poly
        return _oracle_report(frame, poly, 3, args.t_max)
    if args.shape == "hypercube":
        frame = validate_frame(args.row)
        return _oracle_report(frame, ehrhart_hypercube(frame).poly, 4, args.t_max)
    if args.shape == "prop21":
        n = args.a * args.a + args.b * args.b
        rows = []
        for t in range(1, args.t_max + 1):
            rows.append({"t": t, "count": corner_count_direct(args.a, args.b, t), "formula": n * t * t - 2 * t + 1})
        ok = all(r["count"] == r["formula"] for r in rows)
        return {"ok": ok, "rows": rows}, ok
    entries = []
    all_ok = True
    for entry in CORPUS:
        frame = entry.frame()
        report, ok = _oracle_report(frame, ehrhart_hypercube(frame).poly, 4, args.t_max)
        report["name"] = entry.name
        report["printed"] = list(entry.printed_poly.coeffs)
        report["matches_printed"] = report["oracle"] == report["printed"]
        if entry.note:
            report["note"] = entry.note
        entries.append(report)
        all_ok = all_ok and ok
    return {"ok": all_ok, "entries": entries}, all_ok


def _aps(args):
    from .sequences import aps2_terms, aps_witnessed

    if args.dim == 2:
        return aps2_terms(args.bound)
    return aps_witnessed(args.dim, args.coord_bound, args.bound)


def _quadruples(args):
    from .sequences import quadruple_table

    return quadruple_table(args.ell_max, args.ell_min)


def _quadruple_csv(table):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["ell", "a", "b", "c"])
    for ell, reps in table.rows.items():
        for rep in reps:
            w.writerow([ell, *rep])
    return buf.getvalue()


def dispatch(argv):
    """Parse ``argv`` and run the command; never raises for bad input."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return CommandResult(USAGE, {"error": USAGE, "message": str(exc)})
    fmt = args.format
    try:
        if args.command == "ehrhart":
            return CommandResult(OK, _ehrhart(args))
        if args.command == "construct":
            return CommandResult(OK, _construct(args))
        if args.command == "plane":
            return CommandResult(OK, _plane(args))
        if args.command == "verify":
            payload, ok = _verify(args)
            return CommandResult(OK if ok else VALIDATION_ERROR, payload)
        if args.command == "aps":
            table = _aps(args)
            text = table.to_csv() if fmt == "csv" else None
            return CommandResult(OK, table.to_dict(), text)
        if args.command == "quadruples":
            table = _quadruples(args)
            text = _quadruple_csv(table) if fmt == "csv" else None
            return CommandResult(OK, table.to_dict(), text)
        if args.command == "search-k":
            from .sequences import search_k_square

            result = search_k_square(args.k, args.budget)
            return CommandResult(OK if result.found else NOT_FOUND, result.to_dict())
    except UsageError as exc:
        return CommandResult(USAGE, {"error": USAGE, "message": str(exc)})
    except SearchBudgetExceeded as exc:
        return CommandResult(NOT_FOUND, {"error": NOT_FOUND, "message": str(exc), "bound": exc.bound})
    except AssertionError as exc:
        return CommandResult(INTERNAL, {"error": INTERNAL, "message": str(exc)})
    except (LatticeError, ValueError) as exc:
        payload = {"error": VALIDATION_ERROR, "message": str(exc)}
        condition = getattr(exc, "condition", None)
        if condition:
            payload["condition"] = condition
        pair = getattr(exc, "pair", None)
        if pair is not None:
            payload["pair"] = list(pair)
        return CommandResult(VALIDATION_ERROR, payload)
    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None):
    result = dispatch(sys.argv[1:] if argv is None else argv)
    if result.status == OK or "error" not in result.payload:
        sys.stdout.write(result.render())
    else:
        sys.stderr.write(dumps(result.payload) + "\n")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
