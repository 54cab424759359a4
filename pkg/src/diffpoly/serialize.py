"""JSON document formats shared by the library and the CLI."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .differences import GroupFunction, from_table
from .errors import InvalidInputError
from .groups import GroupDescriptor, GroupElement, SemigroupDescriptor
from .polynomials import MonomialForm, NewtonForm, _Form
from .riss import SymmetricForm
from .scalar import Scalar, format_scalar, parse_scalar


def _require(doc: Any, key: str, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise InvalidInputError(f"missing field {key!r}")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise InvalidInputError(f"field {key!r} has the wrong type")
    return value


def _int_list(values, what: str) -> list[int]:
    if not isinstance(values, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in values):
        raise InvalidInputError(f"{what} must be a list of integers")
    return values


def group_to_doc(g: GroupDescriptor) -> dict:
    return {"free_rank": g.free_rank, "torsion_orders": list(g.torsion_orders), "formal_real_rank": g.formal_real_rank}


def group_from_doc(doc: dict) -> GroupDescriptor:
    k = _require(doc, "free_rank", int)
    tor = _int_list(doc.get("torsion_orders", []), "torsion_orders")
    m = doc.get("formal_real_rank", 0)
    if not isinstance(m, int):
        raise InvalidInputError("formal_real_rank must be an integer")
    return GroupDescriptor(k, tuple(tor), m)


def element_to_doc(t: GroupElement) -> dict:
    return {"free": list(t.free), "torsion": list(t.torsion)}


def element_from_doc(doc, g: GroupDescriptor) -> GroupElement:
    """An element document, or a bare list of free coordinates."""
    if isinstance(doc, list):
        return GroupElement(g, tuple(_int_list(doc, "point")), (0,) * len(g.torsion_orders))
    free = _int_list(_require(doc, "free"), "free")
    tor = _int_list(doc.get("torsion", [0] * len(g.torsion_orders)), "torsion")
    return GroupElement(g, tuple(free), tuple(tor))


def semigroup_to_doc(J: SemigroupDescriptor) -> dict:
    return {"kind": J.kind, "generators": [element_to_doc(x) for x in J.generators]}


def semigroup_from_doc(doc, g: GroupDescriptor) -> SemigroupDescriptor:
    kind = _require(doc, "kind", str)
    gens = doc.get("generators", [])
    if not isinstance(gens, list):
        raise InvalidInputError("generators must be a list")
    return SemigroupDescriptor(g, kind, tuple(element_from_doc(x, g) for x in gens))


def scalar_to_doc(value) -> str:
    return format_scalar(value)


def scalar_from_doc(value) -> Scalar:
    return parse_scalar(value)


def poly_to_doc(p: _Form) -> dict:
    doc = {
        "basis": "newton" if isinstance(p, NewtonForm) else "monomial",
        "free_rank": p.k,
        "coeffs": [{"index": list(a), "value": format_scalar(v)} for a, v in p.items()],
    }
    if isinstance(p, NewtonForm):
        doc["degree_bound"] = p.degree_bound
    return doc


def poly_from_doc(doc: dict) -> _Form:
    basis = _require(doc, "basis", str)
    k = _require(doc, "free_rank", int)
    tor = _int_list(doc.get("torsion_orders", []), "torsion_orders")
    g = GroupDescriptor(k, tuple(tor))
    raw = _require(doc, "coeffs", list)
    coeffs: dict[tuple[int, ...], Scalar] = {}
    for entry in raw:
        idx = tuple(_int_list(_require(entry, "index"), "index"))
        coeffs[idx] = coeffs.get(idx, Scalar(0)) + parse_scalar(_require(entry, "value"))
    if basis == "monomial":
        return MonomialForm(g, coeffs)
    if basis == "newton":
        degree = max((sum(a) for a in coeffs), default=0)
        bound = doc.get("degree_bound", degree)
        if not isinstance(bound, int):
            raise InvalidInputError("degree_bound must be an integer")
        return NewtonForm(g, bound, coeffs)
    raise InvalidInputError(f"unknown basis {basis!r}")


def is_table_doc(doc) -> bool:
    return isinstance(doc, dict) and "table" in doc


def table_from_doc(doc: dict) -> tuple[GroupDescriptor, dict[GroupElement, Scalar]]:
    """``{"free_rank": k, "torsion_orders": [...], "table": [[element, "value"], ...]}``."""
    g = group_from_doc({"free_rank": _require(doc, "free_rank", int), "torsion_orders": doc.get("torsion_orders", [])})
    rows = _require(doc, "table", list)
    table = {}
    for row in rows:
        if not isinstance(row, list) or len(row) != 2:
            raise InvalidInputError("table rows must be [element, value] pairs")
        table[element_from_doc(row[0], g)] = parse_scalar(row[1])
    return g, table


def table_to_doc(g: GroupDescriptor, table: dict[GroupElement, Scalar]) -> dict:
    rows = sorted(table.items(), key=lambda kv: (kv[0].free, kv[0].torsion))
    return {
        "free_rank": g.free_rank,
        "torsion_orders": list(g.torsion_orders),
        "table": [[element_to_doc(t), format_scalar(v)] for t, v in rows],
    }


def function_from_table_doc(doc: dict) -> GroupFunction:
    g, table = table_from_doc(doc)
    return from_table(g, table)


def matrix_from_doc(doc) -> SymmetricForm:
    if not isinstance(doc, list) or not all(isinstance(r, list) for r in doc):
        raise InvalidInputError("matrix must be a list of rows")
    try:
        rows = [[_rational(x) for x in r] for r in doc]
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(str(exc)) from None
    return SymmetricForm(tuple(tuple(r) for r in rows))


def _rational(x) -> Fraction:
    if isinstance(x, bool):
        raise InvalidInputError("booleans are not matrix entries")
    if isinstance(x, int):
        return Fraction(x)
    s = parse_scalar(x)
    if s.im:
        raise InvalidInputError("matrix entries must be real")
    return s.re


def matrix_to_doc(rows) -> list[list[str]]:
    return [[str(Fraction(x)) for x in r] for r in rows]
