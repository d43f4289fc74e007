"""Document model for the calculator: input files and reports.

An input document is a single JSON object describing abelian variety
models, an optional Galois action group, a multiplicative value group,
and a list of motives over these.  Rationals are written as integers or
as strings "p/q"; every declared name must resolve; validation failures
carry the JSON path of the offending field.

The same schema is used for machine-readable output, so documents can be
regenerated: parsing and serializing is idempotent after one
normalization pass, and the emitted Cartier dual of a document is again
a valid document over the same varieties.

Field summary (all optional unless noted):

* "group": {"generators": int, "relators": [[signed 1-based ints]]}
* "mult_basis": [names], "mult_relations": [[rationals]]
* "varieties": list of {"name" (required), "g" (required), "points":
  [names], "relations": [[rationals]], "end_generators": [matrix],
  "end_action": [matrix], "dual": name, "dual_transfer": [matrix]}
* "motives" (required): list of {"name", "X_rank" (required),
  "Yv_rank" (required), "X_action": [matrix], "Yv_action": [matrix],
  "A": variety name, "v": [point name or coordinate row],
  "vstar": [...], "psi": [[exponent vector per (i, j)]]}
* "options": {"reductive_dim": int}

Point relations reduce the declared point space: with points (P1, P2)
and relation (-2, 1) (meaning -2 P1 + P2 = 0 up to torsion) the space
has dimension one and the stored coordinates of P1, P2 are canonical
images in the quotient.  Coordinate rows in "v"/"vstar" refer to this
reduced space.  "end_action" matrices act on the reduced space; a
"dual_transfer" entry gives, per endomorphism generator of this
variety, the induced action on the point space of its declared dual,
which must not declare an algebra of its own.
"""

import json
from fractions import Fraction

from .abelian import AbelianVarietyModel, EndAlgebraRep, PointVector, \
    link_duals
from .errors import ValidationError
from .exactlin import QuotientSpace, RatMatrix
from .lattices import ActionGroup, GaloisLattice, TRIVIAL_GROUP
from .liealg import build_E
from .motive import OneMotive, cartier_dual, gr, weight_filtration
from .multgroup import MultSpace
from .radical import radical_cartier_dual, unipotent_radical


def _fail(where, message):
    raise ValidationError("%s: %s" % (where, message))


def format_rational(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_rational(value, where):
    if isinstance(value, bool):
        _fail(where, "expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            _fail(where, "cannot parse %r as a rational" % (value,))
    _fail(where, "expected an integer or a 'p/q' string")


def _expect(value, kind, where, what):
    if not isinstance(value, kind) or isinstance(value, bool):
        _fail(where, "expected %s" % (what,))
    return value


def _parse_int(value, where, minimum=0):
    _expect(value, int, where, "an integer")
    if value < minimum:
        _fail(where, "must be >= %d" % (minimum,))
    return value


def _parse_vector(value, where, length=None):
    _expect(value, list, where, "a list of rationals")
    if length is not None and len(value) != length:
        _fail(where, "expected %d entries, got %d" % (length, len(value)))
    return tuple(parse_rational(x, "%s[%d]" % (where, i))
                 for i, x in enumerate(value))


def _parse_square_matrix(value, where, size):
    _expect(value, list, where, "a matrix as a list of rows")
    if len(value) != size:
        _fail(where, "expected %d rows, got %d" % (size, len(value)))
    rows = [_parse_vector(row, "%s[%d]" % (where, i), size)
            for i, row in enumerate(value)]
    return RatMatrix(size, size, rows)


def _parse_matrix_list(value, where, count, size):
    _expect(value, list, where, "a list of matrices")
    if len(value) != count:
        _fail(where, "expected %d matrices, got %d" % (count, len(value)))
    return tuple(_parse_square_matrix(m, "%s[%d]" % (where, i), size)
                 for i, m in enumerate(value))


def _check_keys(obj, where, allowed, required=()):
    _expect(obj, dict, where, "an object")
    for key in obj:
        if key not in allowed:
            _fail(where, "unknown field %r" % (key,))
    for key in required:
        if key not in obj:
            _fail(where, "missing required field %r" % (key,))


def _vec_json(vec):
    return [format_rational(x) for x in vec]


def _mat_json(m):
    return [_vec_json(row) for row in m.row_list()]


class InputDocument:
    """A parsed and validated document.

    ``motives`` holds (normalized entry, OneMotive) pairs in input
    order; ``normalized`` is the canonical dict form used for
    serialization, duals, and round-trip comparison.
    """

    def __init__(self, group, mult_space, varieties, motives, options,
                 normalized):
        self.group = group
        self.mult_space = mult_space
        self.varieties = varieties
        self.motives = motives
        self.options = options
        self.normalized = normalized


def _parse_group(entry):
    where = "group"
    _check_keys(entry, where, {"generators", "relators"}, {"generators"})
    count = _parse_int(entry["generators"], where + ".generators")
    relators = []
    for i, word in enumerate(entry.get("relators", [])):
        wword = "%s.relators[%d]" % (where, i)
        _expect(word, list, wword, "a list of signed generator indices")
        relators.append([_parse_int(k, "%s[%d]" % (wword, j),
                                    minimum=-(10 ** 9))
                         for j, k in enumerate(word)])
    try:
        return ActionGroup(count, relators)
    except ValueError as exc:
        _fail(where, str(exc))


def _parse_varieties(entries, group):
    models = {}
    parsed = []
    for i, entry in enumerate(entries):
        where = "varieties[%d]" % (i,)
        _check_keys(entry, where,
                    {"name", "g", "points", "relations", "end_generators",
                     "end_action", "dual", "dual_transfer"},
                    {"name", "g"})
        name = _expect(entry["name"], str, where + ".name", "a string")
        if name in (p["name"] for p in parsed):
            _fail(where + ".name", "duplicate variety name %r" % (name,))
        g = _parse_int(entry["g"], where + ".g", minimum=1)
        point_names = []
        for j, pname in enumerate(entry.get("points", [])):
            _expect(pname, str, "%s.points[%d]" % (where, j), "a string")
            if pname in point_names:
                _fail("%s.points[%d]" % (where, j),
                      "duplicate point name %r" % (pname,))
            point_names.append(pname)
        relations = []
        for j, rel in enumerate(entry.get("relations", [])):
            relations.append(_parse_vector(
                rel, "%s.relations[%d]" % (where, j), len(point_names)))
        if relations and not point_names:
            _fail(where + ".relations", "relations need declared points")
        try:
            quotient = QuotientSpace(len(point_names), relations)
        except ValueError as exc:
            _fail(where + ".relations", str(exc))
        parsed.append({
            "name": name, "g": g, "where": where,
            "point_names": point_names, "relations": relations,
            "quotient": quotient, "entry": entry,
        })

    by_name = {p["name"]: p for p in parsed}
    for p in parsed:
        entry, where = p["entry"], p["where"]
        dual_name = entry.get("dual")
        if dual_name is not None:
            _expect(dual_name, str, where + ".dual", "a string")
            if dual_name not in by_name:
                _fail(where + ".dual", "unknown variety %r" % (dual_name,))
            partner = by_name[dual_name]
            back = partner["entry"].get("dual")
            if back is not None and back != p["name"]:
                _fail(where + ".dual",
                      "dual link of %r and %r is not symmetric"
                      % (p["name"], dual_name))
        elif "dual_transfer" in entry:
            _fail(where + ".dual_transfer", "requires a dual link")

    for p in parsed:
        entry, where = p["entry"], p["where"]
        dim = p["quotient"].dim
        algebra = None
        action = ()
        if "end_generators" in entry:
            gens = entry["end_generators"]
            _expect(gens, list, where + ".end_generators",
                    "a list of matrices")
            if not gens:
                _fail(where + ".end_generators", "need at least one matrix")
            degree = len(_expect(gens[0], list,
                                 where + ".end_generators[0]", "a matrix"))
            mats = _parse_matrix_list(gens, where + ".end_generators",
                                      len(gens), degree)
            try:
                algebra = EndAlgebraRep(degree, mats)
            except ValidationError as exc:
                _fail(where + ".end_generators", str(exc))
            action = _parse_matrix_list(
                entry.get("end_action", []), where + ".end_action",
                len(mats), dim)
        elif "end_action" in entry:
            _fail(where + ".end_action", "requires end_generators")
        p["algebra"] = algebra
        p["action"] = action

    for p in parsed:
        entry, where = p["entry"], p["where"]
        if "dual_transfer" not in entry:
            continue
        if p["algebra"] is None:
            _fail(where + ".dual_transfer", "requires end_generators")
        partner = by_name[entry["dual"]]
        if partner is not p and partner["algebra"] is not None:
            _fail(where + ".dual_transfer",
                  "the dual variety already declares its own algebra")
        transfer = _parse_matrix_list(
            entry["dual_transfer"], where + ".dual_transfer",
            len(p["algebra"].generators), partner["quotient"].dim)
        partner["algebra"] = p["algebra"]
        partner["action"] = transfer

    for p in parsed:
        where = p["where"]
        tracked = {pname: p["quotient"].generator(j)
                   for j, pname in enumerate(p["point_names"])}
        try:
            models[p["name"]] = AbelianVarietyModel(
                p["name"], p["g"],
                end_algebra=p["algebra"],
                point_space_dim=p["quotient"].dim,
                end_action=p["action"],
                tracked_points=tracked)
        except ValidationError as exc:
            _fail(where, str(exc))

    for p in parsed:
        dual_name = p["entry"].get("dual")
        if dual_name is not None:
            try:
                link_duals(models[p["name"]], models[dual_name])
            except ValidationError as exc:
                _fail(p["where"] + ".dual", str(exc))

    normalized = []
    for p in parsed:
        out = {"name": p["name"], "g": p["g"]}
        if p["point_names"]:
            out["points"] = list(p["point_names"])
        if p["relations"]:
            out["relations"] = [_vec_json(rel) for rel in p["relations"]]
        entry = p["entry"]
        if "end_generators" in entry:
            out["end_generators"] = [
                _mat_json(m)
                for m in models[p["name"]].end_algebra.generators]
        if "end_action" in entry:
            out["end_action"] = [_mat_json(m)
                                 for m in models[p["name"]].end_action]
        if "dual" in entry:
            out["dual"] = entry["dual"]
        if "dual_transfer" in entry:
            out["dual_transfer"] = [
                _mat_json(m)
                for m in models[entry["dual"]].end_action]
        normalized.append(out)
    normalized.sort(key=lambda item: item["name"])
    return models, normalized


def _parse_point_entry(value, model, where):
    if isinstance(value, str):
        try:
            return model.point(value)
        except ValidationError as exc:
            _fail(where, str(exc))
    return _parse_vector(value, where, model.point_space_dim)


def _normalize_point_entry(value):
    if isinstance(value, str):
        return value
    return _vec_json(tuple(Fraction(x) for x in value))


def _parse_motive(entry, index, group, mult_space, models):
    where = "motives[%d]" % (index,)
    _check_keys(entry, where,
                {"name", "X_rank", "Yv_rank", "X_action", "Yv_action",
                 "A", "v", "vstar", "psi"},
                {"X_rank", "Yv_rank"})
    name = entry.get("name")
    if name is not None:
        _expect(name, str, where + ".name", "a string")
    r = _parse_int(entry["X_rank"], where + ".X_rank")
    s = _parse_int(entry["Yv_rank"], where + ".Yv_rank")

    def lattice(rank, key):
        action = None
        if key in entry:
            action = _parse_matrix_list(entry[key], "%s.%s" % (where, key),
                                        group.generator_count, rank)
        try:
            return GaloisLattice(rank, action=action, group=group)
        except ValueError as exc:
            _fail("%s.%s" % (where, key), str(exc))

    x = lattice(r, "X_action")
    yv = lattice(s, "Yv_action")

    kwargs = {}
    if "A" in entry:
        a_name = _expect(entry["A"], str, where + ".A", "a string")
        if a_name not in models:
            _fail(where + ".A", "unknown variety %r" % (a_name,))
        a = models[a_name]
        if not a.has_dual:
            _fail(where + ".A",
                  "variety %r needs a dual link to serve as the abelian part"
                  % (a_name,))
        astar = a.dual
        v_entries = entry.get("v", [])
        _expect(v_entries, list, where + ".v", "a list")
        if len(v_entries) != r:
            _fail(where + ".v", "expected %d entries, got %d"
                  % (r, len(v_entries)))
        vstar_entries = entry.get("vstar", [])
        _expect(vstar_entries, list, where + ".vstar", "a list")
        if len(vstar_entries) != s:
            _fail(where + ".vstar", "expected %d entries, got %d"
                  % (s, len(vstar_entries)))
        v = PointVector(a, [
            _parse_point_entry(e, a, "%s.v[%d]" % (where, i))
            for i, e in enumerate(v_entries)])
        vstar = PointVector(astar, [
            _parse_point_entry(e, astar, "%s.vstar[%d]" % (where, i))
            for i, e in enumerate(vstar_entries)])
        kwargs = dict(A=a, Astar=astar, v=v, vstar=vstar)
    else:
        for key in ("v", "vstar"):
            if entry.get(key):
                _fail("%s.%s" % (where, key),
                      "given but the motive declares no abelian part")

    psi = None
    raw_psi = None
    if "psi" in entry:
        table = _expect(entry["psi"], list, where + ".psi", "a list of rows")
        if len(table) != r:
            _fail(where + ".psi", "expected %d rows, got %d"
                  % (r, len(table)))
        raw_psi = []
        psi = []
        for i, row in enumerate(table):
            wrow = "%s.psi[%d]" % (where, i)
            _expect(row, list, wrow, "a list of exponent vectors")
            if len(row) != s:
                _fail(wrow, "expected %d entries, got %d" % (s, len(row)))
            raw_row = []
            psi_row = []
            for j, vec in enumerate(row):
                exponents = _parse_vector(
                    vec, "%s[%d]" % (wrow, j),
                    len(mult_space.generator_names))
                raw_row.append(exponents)
                psi_row.append(mult_space.element(exponents))
            raw_psi.append(raw_row)
            psi.append(psi_row)

    try:
        motive = OneMotive(x, yv, psi=psi, mult_space=mult_space,
                           name=name, **kwargs)
    except ValidationError as exc:
        _fail(where, str(exc))

    normalized = {"X_rank": r, "Yv_rank": s}
    if name is not None:
        normalized["name"] = name
    if "X_action" in entry:
        normalized["X_action"] = [_mat_json(m) for m in x.action]
    if "Yv_action" in entry:
        normalized["Yv_action"] = [_mat_json(m) for m in yv.action]
    if "A" in entry:
        normalized["A"] = entry["A"]
        normalized["v"] = [_normalize_point_entry(e)
                           for e in entry.get("v", [])]
        normalized["vstar"] = [_normalize_point_entry(e)
                               for e in entry.get("vstar", [])]
    if raw_psi is not None:
        normalized["psi"] = [[_vec_json(vec) for vec in row]
                             for row in raw_psi]
    return normalized, motive


def parse_input(text):
    """Parse and validate a JSON document string."""
    data = json.loads(text)
    _check_keys(data, "document",
                {"group", "mult_basis", "mult_relations", "varieties",
                 "motives", "options"},
                {"motives"})

    group = TRIVIAL_GROUP
    if "group" in data:
        group = _parse_group(data["group"])

    names = data.get("mult_basis", [])
    _expect(names, list, "mult_basis", "a list of names")
    for i, n in enumerate(names):
        _expect(n, str, "mult_basis[%d]" % (i,), "a string")
    relations = []
    for i, rel in enumerate(data.get("mult_relations", [])):
        relations.append(_parse_vector(rel, "mult_relations[%d]" % (i,),
                                       len(names)))
    if relations and not names:
        _fail("mult_relations", "relations need mult_basis generators")
    try:
        mult_space = MultSpace(names, relations)
    except ValidationError as exc:
        _fail("mult_basis", str(exc))

    entries = data.get("varieties", [])
    _expect(entries, list, "varieties", "a list")
    models, varieties_norm = _parse_varieties(entries, group)

    motive_entries = _expect(data["motives"], list, "motives", "a list")
    motives = []
    for i, entry in enumerate(motive_entries):
        motives.append(_parse_motive(entry, i, group, mult_space, models))

    options = {}
    if "options" in data:
        _check_keys(data["options"], "options", {"reductive_dim"})
        if "reductive_dim" in data["options"]:
            options["reductive_dim"] = _parse_int(
                data["options"]["reductive_dim"], "options.reductive_dim")

    normalized = {}
    if group is not TRIVIAL_GROUP:
        normalized["group"] = {
            "generators": group.generator_count,
            "relators": [list(w) for w in group.relators],
        }
    if names:
        normalized["mult_basis"] = list(names)
    if relations:
        normalized["mult_relations"] = [_vec_json(rel) for rel in relations]
    if varieties_norm:
        normalized["varieties"] = varieties_norm
    normalized["motives"] = [n for n, _ in motives]
    if options:
        normalized["options"] = dict(options)

    return InputDocument(group, mult_space, models, motives, options,
                         normalized)


def load_input(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_input(handle.read())


def serialize_document(payload):
    """Deterministic JSON text for a document or report dict."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def dual_document(doc):
    """The Cartier-dual document: swapped roles, same varieties and names."""
    out = {key: value for key, value in doc.normalized.items()
           if key != "motives"}
    out_motives = []
    for entry, motive in doc.motives:
        dual_entry = {
            "X_rank": entry["Yv_rank"],
            "Yv_rank": entry["X_rank"],
        }
        if "name" in entry:
            dual_entry["name"] = entry["name"]
        if "Yv_action" in entry:
            dual_entry["X_action"] = entry["Yv_action"]
        if "X_action" in entry:
            dual_entry["Yv_action"] = entry["X_action"]
        if "A" in entry:
            dual_entry["A"] = motive.Astar.name
            dual_entry["v"] = list(entry["vstar"])
            dual_entry["vstar"] = list(entry["v"])
        if "psi" in entry:
            rows = entry["psi"]
            dual_entry["psi"] = [[rows[i][j] for i in range(len(rows))]
                                 for j in range(motive.s)]
        out_motives.append(dual_entry)
    out["motives"] = out_motives
    return out


def _basis_json(space):
    return [_vec_json(col) for col in space.basis_columns()]


def _points_json(points):
    if points is None:
        return None
    return [_vec_json(row) for row in points.coords]


def _bracket_json(data):
    table = []
    for (l, p, q), mat in sorted(data.bracket.coefficients.items()):
        table.append({
            "component": l,
            "left_block": p,
            "right_block": q,
            "matrix": _mat_json(mat),
        })
    return table


def analyze_motive(motive, reductive_dim=None):
    """All computed data for one motive, as a JSON-ready dict."""
    weights = weight_filtration(motive)
    pieces = gr(motive)
    end_data = build_E(pieces)
    report = unipotent_radical(motive, reductive_dim=reductive_dim)
    dual_data = radical_cartier_dual(report)

    g = motive.g
    payload = {
        "name": motive.name,
        "weights": {
            "w0_rank": motive.r,
            "wm1_dim": weights.dim_wm1,
            "wm2_dim": weights.dim_wm2,
        },
        "gr": {
            "X_rank": motive.r,
            "A": motive.A.name if motive.A is not None else None,
            "A_dim": g,
            "Y_rank": motive.s,
        },
        "E": {
            "em1_dim": (motive.r + motive.s) * g,
            "em2_rank": end_data.em2.rank,
            "bracket": _bracket_json(end_data),
        },
        "b": {
            "b1": _points_json(report.b1),
            "b2": _points_json(report.b2),
        },
        "B": {
            "w_a_basis": _basis_json(report.b.w_a.module)
            if report.b.w_a is not None else None,
            "w_astar_basis": _basis_json(report.b.w_astar.module)
            if report.b.w_astar is not None else None,
            "dim_B": report.dim_B,
        },
        "Z": {
            "z1_basis": _basis_json(report.z1),
            "z1_dim": report.z1.dim,
            "z_basis": _basis_json(report.z),
            "dim_Z": report.dim_Z,
            "quasi_deficient": report.quasi_deficient,
            "derived_dim": report.derived_dim,
        },
        "extension": [
            {
                "character": _vec_json(char),
                "astar_points": _points_json(report.extension.astar_values[i]),
                "a_points": _points_json(report.extension.a_values[i]),
            }
            for i, char in enumerate(report.extension.characters)
        ],
        "dims": {
            "dim_B": report.dim_B,
            "dim_Z": report.dim_Z,
            "dim_unipotent": report.dim_unipotent,
            "reductive_dim": report.reductive_dim,
            "total_dim": report.total_dim,
        },
        "dual_radical": {
            "Zv_rank": dual_data.lattice.rank,
            "Zv_action": [_mat_json(m) for m in dual_data.lattice.action],
            "characters": [_vec_json(c) for c in dual_data.characters],
            "V_astar": [_points_json(p) for p in dual_data.astar_values],
            "V_a": [_points_json(p) for p in dual_data.a_values],
            "expressible": report.dim_B == 0,
        },
    }
    return payload, report


def build_report(doc, reductive_dim=None):
    """Analyze every motive of a document, in input order."""
    effective = reductive_dim
    if effective is None:
        effective = doc.options.get("reductive_dim")
    reports = []
    for _, motive in doc.motives:
        payload, _ = analyze_motive(motive, reductive_dim=effective)
        reports.append(payload)
    return {"reports": reports}


def _format_reductive(value):
    if isinstance(value, int):
        return str(value)
    return value


def report_text(report):
    """Human-readable rendering of a report dict."""
    lines = []
    for i, entry in enumerate(report["reports"]):
        name = entry["name"] if entry["name"] is not None else "#%d" % (i,)
        grd = entry["gr"]
        lines.append("motive %s" % (name,))
        lines.append("  weights: W0 rank %d; W-1 dim %d; W-2 dim %d"
                     % (entry["weights"]["w0_rank"],
                        entry["weights"]["wm1_dim"],
                        entry["weights"]["wm2_dim"]))
        lines.append("  gr: X rank %d; A = %s (dim %d); Y rank %d"
                     % (grd["X_rank"], grd["A"] or "0", grd["A_dim"],
                        grd["Y_rank"]))
        lines.append("  E: E-1 dim %d; E-2 rank %d; bracket entries %d"
                     % (entry["E"]["em1_dim"], entry["E"]["em2_rank"],
                        len(entry["E"]["bracket"])))
        lines.append("  B: dim %d" % (entry["B"]["dim_B"],))
        lines.append("  Z1: dim %d (quasi-deficient: %s)"
                     % (entry["Z"]["z1_dim"],
                        "yes" if entry["Z"]["quasi_deficient"] else "no"))
        z_basis = ", ".join("(%s)" % ", ".join(vec)
                            for vec in entry["Z"]["z_basis"])
        lines.append("  Z: dim %d%s"
                     % (entry["Z"]["dim_Z"],
                        "; basis %s" % (z_basis,) if z_basis else ""))
        dims = entry["dims"]
        total = dims["total_dim"]
        lines.append(
            "  dim Lie = dim B (%d) + dim Z (%d) + reductive (%s)%s"
            % (dims["dim_B"], dims["dim_Z"],
               _format_reductive(dims["reductive_dim"]),
               " = %d" % (total,) if total is not None else ""))
        lines.append("  dual radical: [Z^v rank %d -> B* dim %d]"
                     % (entry["dual_radical"]["Zv_rank"],
                        entry["B"]["dim_B"]))
    return "\n".join(lines) + "\n"


def gr_summary(doc):
    """Graded-pieces summary for every motive of a document."""
    out = []
    for _, motive in doc.motives:
        out.append({
            "name": motive.name,
            "X_rank": motive.r,
            "A": motive.A.name if motive.A is not None else None,
            "A_dim": motive.g,
            "Y_rank": motive.s,
        })
    return {"gr": out}


def gr_text(summary):
    lines = []
    for i, entry in enumerate(summary["gr"]):
        name = entry["name"] if entry["name"] is not None else "#%d" % (i,)
        lines.append("motive %s: X rank %d; A = %s (dim %d); Y rank %d"
                     % (name, entry["X_rank"], entry["A"] or "0",
                        entry["A_dim"], entry["Y_rank"]))
    return "\n".join(lines) + "\n"


def _scaled_motive(m, n):
    kwargs = {}
    if m.A is not None:
        kwargs = dict(
            A=m.A, Astar=m.Astar,
            v=PointVector(m.A, [[n * c for c in row] for row in m.v.coords]),
            vstar=PointVector(m.Astar, [[n * c for c in row]
                                        for row in m.vstar.coords]))
    psi = [[[n * n * c for c in m.psi[i][j]] for j in range(m.s)]
           for i in range(m.r)]
    return OneMotive(m.X, m.Yv, psi=psi, mult_space=m.mult_space, **kwargs)


def check_invariants(doc):
    """Property checks on every motive; returns failure messages."""
    failures = []
    for index, (_, motive) in enumerate(doc.motives):
        label = motive.name or "motives[%d]" % (index,)
        report = unipotent_radical(motive)
        if report.dim_unipotent != report.dim_B + report.dim_Z:
            failures.append("%s: dim_unipotent is not dim_B + dim_Z"
                            % (label,))
        if not report.z.contains_space(report.z1):
            failures.append("%s: Z1 is not contained in Z" % (label,))
        dual_report = unipotent_radical(cartier_dual(motive))
        if (report.dim_B, report.dim_Z) != \
                (dual_report.dim_B, dual_report.dim_Z):
            failures.append("%s: dual motive reports different dims"
                            % (label,))
        double = cartier_dual(cartier_dual(motive))
        if not motive.structurally_equal(double):
            failures.append("%s: double dual differs from the motive"
                            % (label,))
        scaled = unipotent_radical(_scaled_motive(motive, 2))
        same = (scaled.z1 == report.z1 and scaled.z == report.z)
        if same and motive.A is not None:
            same = (scaled.b.w_a.module == report.b.w_a.module
                    and scaled.b.w_astar.module == report.b.w_astar.module)
        if not same:
            failures.append("%s: scaling (v, v*, psi) by (2, 2, 4) moved "
                            "a reported subspace" % (label,))
    return failures
