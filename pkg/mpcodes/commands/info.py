"""
info - parameters, matrix conditions, distance bounds and decoding radius of a spec.
"""

import argparse

from commands.common import add_spec_arguments, emit, load_spec
from errors import EnumerationCapExceeded
from services.matrix_product import distance_lower_bound
from services.unit_mpc import d_star


def register(subparsers) -> None:
    parser = subparsers.add_parser("info", help="describe a code spec")
    add_spec_arguments(parser)
    parser.add_argument("--kv", action="store_true")
    parser.set_defaults(handler=run)


def _distance_rows(built):
    code = built.code
    if built.kind == "unit":
        report = d_star(code)
        spans = ",".join(f"{D.value}" + ("" if D.provenance.value == "exact" else "*")
                         for D in report.row_span_distances)
        return [("d_star", report.d_star), ("D_i", spans),
                ("bound_unique_radius", (report.d_star - 1) // 2)]
    try:
        bound = distance_lower_bound(code)
        return [("distance_lower_bound", bound), ("bound_unique_radius", (bound - 1) // 2)]
    except EnumerationCapExceeded as e:
        return [("distance_lower_bound", f"unavailable ({e})")]


def run(args: argparse.Namespace) -> int:
    built = load_spec(args)
    code = built.code
    distance = built.true_distance()

    rows = [
        ("name", built.name),
        ("field", built.field.describe()),
        ("kind", built.kind),
        ("n", code.length),
        ("k", code.dimension),
        ("s", code.s),
        ("l", code.l),
        ("matrix", str(code.matrix)),
        ("nested", code.nested),
    ]
    if built.kind == "unit":
        rows.append(("unit_by_columns", code.unit_by_columns))
    else:
        rows.append(("nonsingular_by_columns", code.nonsingular_by_columns))
    rows.append(("distance", distance if distance is not None else "?"))
    rows.extend(_distance_rows(built))

    for j, part in enumerate(built.constituents, start=1):
        rows.append((f"C_{j}", f"{part.code!r}, decoder: {part.decoder.describe()}"))
    if built.decoder is not None:
        rows.extend([
            ("taus", ",".join(str(t) for t in built.decoder.taus)),
            ("tau_bound", built.decoder.bound),
            ("tau", built.decoder.tau),
            ("branch_budget", built.decoder.branch_budget),
        ])
        if distance is not None:
            rows.append(("unique_radius", (distance - 1) // 2))
    emit(rows, kv=args.kv)
    return 0
