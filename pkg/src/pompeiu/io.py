"""Group files, verdict/report serialization.

Group file layout (version line, ``key: value`` header, then a body section)::

    pompeiu-group/1
    label: Z2
    order: 2
    factors: 2
    table:
    0 1
    1 0

The body is either ``table:`` followed by n rows, or ``generators:`` followed
by one permutation per line in cycle notation.
"""
from __future__ import annotations

import csv
import io as _io
import json

from .algebra import GroupRingElement
from .engine import ClassificationReport, PompeiuVerdict
from .errors import GroupError, GroupFileError
from .groups import FiniteGroup, check_associative, check_order, from_permutation_generators, parse_cycles
from .lattice import RecurrenceWitness

VERSION = "pompeiu-group/1"
HEADER_KEYS = ("label", "order", "factors")


def parse_group_file(text: str) -> FiniteGroup:
    lines = text.splitlines()
    if not lines or lines[0].strip() != VERSION:
        found = lines[0].strip() if lines else ""
        raise GroupFileError(f"expected version line {VERSION!r}, found {found!r}", 1, 1)
    header = {}
    body_kind = None
    body_start = None
    for i, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line in ("table:", "generators:"):
            body_kind = line[:-1]
            body_start = i
            break
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in HEADER_KEYS:
            raise GroupFileError(f"malformed header line {line!r}", i, 1)
        if key in header:
            raise GroupFileError(f"duplicate header key {key!r}", i, 1)
        header[key] = (value.strip(), i)
    if body_kind is None:
        raise GroupFileError("missing 'table:' or 'generators:' section", len(lines), 1)
    for key in ("label", "order"):
        if key not in header:
            raise GroupFileError(f"missing header key {key!r}", 2, 1)
    label = header["label"][0]
    try:
        order = int(header["order"][0])
    except ValueError:
        raise GroupFileError("order must be an integer", header["order"][1], 8) from None
    if order < 1:
        raise GroupFileError("order must be positive", header["order"][1], 8)
    check_order(order)
    factors = None
    if "factors" in header:
        value, ln = header["factors"]
        try:
            factors = tuple(int(t) for t in value.replace(",", " ").split())
        except ValueError:
            raise GroupFileError("factors must be integers", ln, 10) from None

    body = [(i, raw) for i, raw in enumerate(lines[body_start:], start=body_start + 1)
            if raw.strip() and not raw.strip().startswith("#")]
    if body_kind == "table":
        G = _parse_table(body, order, label, factors)
    else:
        gens = []
        for ln, raw in body:
            try:
                parse_cycles(raw)
            except GroupError as exc:
                raise GroupFileError(str(exc), ln, 1) from None
            gens.append(raw.strip())
        if not gens:
            raise GroupFileError("no generators listed", body_start, 1)
        try:
            G = from_permutation_generators(gens, label=label)
        except GroupError as exc:
            raise GroupFileError(str(exc), body_start, 1) from None
        if G.order != order:
            raise GroupFileError(f"generators produce a group of order {G.order}, header says {order}",
                                 header["order"][1], 8)
        G.cyclic_factors = factors
    if factors is not None and not G.is_abelian():
        raise GroupFileError("cyclic factors given for a nonabelian group", header["factors"][1], 1)
    return G


def _parse_table(body, order, label, factors) -> FiniteGroup:
    if len(body) != order:
        ln = body[-1][0] if body else None
        raise GroupFileError(f"table has {len(body)} rows, expected {order}", ln, 1)
    rows = []
    for r, (ln, raw) in enumerate(body):
        tokens = raw.split()
        if len(tokens) != order:
            raise GroupFileError(f"row has {len(tokens)} entries, expected {order}", ln, 1)
        row = []
        col = 1
        for t in tokens:
            col = raw.index(t, col - 1) + 1
            try:
                v = int(t)
            except ValueError:
                raise GroupFileError(f"entry {t!r} is not an integer", ln, col) from None
            if not 0 <= v < order:
                raise GroupFileError(f"entry {v} out of range 0..{order - 1}", ln, col)
            row.append(v)
            col += len(t)
        seen = {}
        for c, v in enumerate(row):
            if v in seen:
                raise GroupFileError(f"row not a permutation (entry {v} repeated)", ln, _column_of(raw, c))
            seen[v] = c
        rows.append(row)
    for c in range(order):
        column = [rows[r][c] for r in range(order)]
        if len(set(column)) != order:
            dup = next(r for r in range(order) if column.index(column[r]) != r)
            raise GroupFileError("column not a permutation", body[dup][0], _column_of(body[dup][1], c))
    try:
        check_associative(rows)
    except GroupError as exc:
        a = exc.args[1][0] if len(exc.args) > 1 else 0
        raise GroupFileError(exc.args[0], body[a][0], 1) from None
    try:
        return FiniteGroup.from_table(rows, label=label, cyclic_factors=factors)
    except GroupError as exc:
        raise GroupFileError(str(exc), body[0][0], 1) from None


def _column_of(raw: str, index: int) -> int:
    pos = 0
    for k, tok in enumerate(raw.split()):
        pos = raw.index(tok, pos)
        if k == index:
            return pos + 1
        pos += len(tok)
    return 1


def serialize_group(G: FiniteGroup) -> str:
    width = len(str(G.order - 1))
    out = [VERSION, f"label: {G.label}", f"order: {G.order}"]
    if G.cyclic_factors is not None:
        out.append("factors: " + " ".join(map(str, G.cyclic_factors)))
    out.append("table:")
    for row in G.mul:
        out.append(" ".join(str(v).rjust(width) for v in row))
    return "\n".join(out) + "\n"


def read_group(path) -> FiniteGroup:
    with open(path, encoding="utf-8") as fh:
        return parse_group_file(fh.read())


# verdicts ----------------------------------------------------------------------


def format_witness(f: GroupRingElement) -> str:
    from .algebra import format_element

    return format_element(f)


def element_json(f: GroupRingElement) -> dict:
    return {str(g): str(a) for g, a in f.coeffs.items()}


def verdict_text(v: PompeiuVerdict) -> str:
    n = v.subset.group.order
    if v.is_pompeiu:
        head = f"Pompeiu (rank {v.ideal_rank}/{n})"
    else:
        head = f"NOT Pompeiu (rank {v.ideal_rank}/{n}); witness: {format_witness(v.witness_basis[0])}"
        if v.witness_dim > 1:
            head += f" (+{v.witness_dim - 1} more, dim {v.witness_dim})"
    if v.oracle_agreement is not None:
        head += f"\noracle: {v.oracle_agreement.summary()}, agrees={str(v.oracle_agreement.agrees).lower()}"
    return head


def verdict_json(v: PompeiuVerdict) -> dict:
    G = v.subset.group
    data = {
        "group": G.label,
        "order": G.order,
        "subset": list(v.subset.elements),
        "is_pompeiu": v.is_pompeiu,
        "ideal_rank": v.ideal_rank,
        "witness_dim": v.witness_dim,
        "witness_basis": [element_json(w) for w in v.witness_basis],
        "oracle": None,
    }
    if v.oracle_agreement is not None:
        data["oracle"] = {
            "kind": "dft",
            "all_nonzero": v.oracle_agreement.dft_all_nonzero,
            "zero_characters": [list(j) for j in v.oracle_agreement.zero_characters],
            "agrees": v.oracle_agreement.agrees,
        }
    return data


# reports -----------------------------------------------------------------------

CSV_HEADER = ["subset", "size", "is_pompeiu", "ideal_rank", "witness_dim"]


def _subset_text(elems) -> str:
    return "{" + ",".join(map(str, elems)) + "}"


def report_json(r: ClassificationReport) -> dict:
    return {
        "format": "pompeiu-report/1",
        "group": {"label": r.group.label, "order": r.group.order},
        "mode": r.mode,
        "max_size": r.max_size,
        "summary": {
            **r.counts(),
            "is_pompeiu_group": r.is_pompeiu_group,
            "is_l2_pompeiu_group": r.l2.holds,
            "l2_explanation": r.l2.explanation,
            "normal_subgroups": [list(N) for N in r.normal_subgroups],
        },
        "rows": [
            {
                "subset": list(row.subset),
                "size": row.size,
                "is_pompeiu": row.is_pompeiu,
                "ideal_rank": row.ideal_rank,
                "witness_dim": row.witness_dim,
                "orbit_size": row.orbit_size,
                "oracle": row.oracle,
            }
            for row in r.rows
        ],
    }


def render_report(r: ClassificationReport, fmt: str = "md") -> str:
    if fmt == "json":
        return json.dumps(report_json(r), indent=2, sort_keys=False) + "\n"
    if fmt == "csv":
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for row in r.rows:
            w.writerow([" ".join(map(str, row.subset)), row.size, str(row.is_pompeiu).lower(),
                        row.ideal_rank, row.witness_dim])
        return buf.getvalue()
    if fmt != "md":
        raise ValueError(f"unknown report format {fmt!r}")
    c = r.counts()
    group_verdict = {True: "yes", False: "no", None: f"undetermined (subsets up to size {r.max_size})"}
    lines = [
        f"# Pompeiu report: {r.group.label} (order {r.group.order})",
        "",
        f"- enumeration: {r.mode}" + (f", max size {r.max_size}" if r.max_size else ""),
        f"- subsets: {c['subsets']} (Pompeiu {c['pompeiu']}, not Pompeiu {c['not_pompeiu']})",
        f"- F(G)-Pompeiu group: {group_verdict[r.is_pompeiu_group]}",
        f"- l2-Pompeiu group: {'yes' if r.l2.holds else 'no'} ({r.l2.explanation})",
        "- normal subgroups: " + ", ".join(_subset_text(N) for N in r.normal_subgroups),
        "",
        "| subset | size | Pompeiu | ideal rank | witness dim | orbit | oracle |",
        "|---|---|---|---|---|---|---|",
    ]
    for row in r.rows:
        lines.append(f"| {_subset_text(row.subset)} | {row.size} | {'yes' if row.is_pompeiu else 'no'} | "
                     f"{row.ideal_rank} | {row.witness_dim} | {row.orbit_size} | {row.oracle} |")
    return "\n".join(lines) + "\n"


# lattice ------------------------------------------------------------------------


def fmt_float(x) -> str:
    return f"{x:.12g}"


def fmt_complex(z) -> str:
    z = complex(z)
    return f"{fmt_float(z.real)}{'+' if z.imag >= 0 else '-'}{fmt_float(abs(z.imag))}i"


def witness_json(w: RecurrenceWitness) -> dict:
    return {
        "subset": list(w.subset),
        "exact": w.exact,
        "window": w.window,
        "period": [str(x) for x in w.period] if w.exact else None,
        "roots": [{"root": fmt_complex(r), "multiplicity": m} for r, m in w.roots],
        "residual": str(w.residual) if w.exact else fmt_float(w.residual),
    }
