"""Command-line front end. Every subcommand prints one JSON document to stdout.

Exit status: 0 on success, 1 for domain errors, 2 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from . import serialize as io
from .differences import degree_test, verify_binomial_identities
from .errors import DiffPolyError, InvalidInputError, NotAPolynomialError
from .extension import extend_eval, restrict
from .groups import GroupDescriptor, SemigroupDescriptor, orthant_decompose
from .polynomials import (
    MonomialForm,
    NewtonForm,
    eval_newton,
    homogeneous_parts,
    monomial_to_newton,
    newton_from_oracle,
    newton_to_monomial,
)
from .riss import riss_form_of, squares_decomposition, sylvester_diagonalize
from .spaces import dim_pn, infinite_dim_certificate, monomial_basis, tensor_split


def _load(source: str, stdin=None) -> Any:
    """A JSON document from a file path, ``-`` for stdin, or inline JSON text."""
    try:
        if source == "-":
            text = (stdin or sys.stdin).read()
        elif source.lstrip().startswith(("{", "[")):
            text = source
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except OSError as exc:
        raise InvalidInputError(f"cannot read {source!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"invalid JSON in {source!r}: {exc.msg}") from None


def _newton(doc, degree: int | None) -> NewtonForm:
    """A Newton form from a coefficient document or a value table (fitted, then checked against the table)."""
    if io.is_table_doc(doc):
        if degree is None:
            raise InvalidInputError("--degree is required for table input")
        g, table = io.table_from_doc(doc)
        f = io.function_from_table_doc(doc)
        p = newton_from_oracle(f, degree, check=False)
        for t, v in table.items():
            if eval_newton(p, t) != v:
                raise NotAPolynomialError(f"table is not a polynomial of degree <= {degree}")
        return p
    p = io.poly_from_doc(doc)
    if isinstance(p, MonomialForm):
        p = monomial_to_newton(p)
    if degree is not None:
        if p.degree is not None and p.degree > degree:
            raise NotAPolynomialError(f"form has degree {p.degree} > {degree}")
        p = p.with_bound(degree)
    return p


def _group_for(args, free_rank: int | None = None) -> GroupDescriptor:
    if getattr(args, "group", None):
        return io.group_from_doc(_load(args.group))
    return GroupDescriptor(free_rank or 0)


def _point(args, g: GroupDescriptor):
    return io.element_from_doc(_load(args.point), g)


def cmd_eval(args, stdin) -> dict:
    p = _newton(_load(args.poly, stdin), args.degree)
    t = _point(args, p.group)
    return {"value": io.scalar_to_doc(eval_newton(p, t))}


def _semigroup(args, g: GroupDescriptor) -> SemigroupDescriptor:
    spec = args.semigroup
    aliases = {"orthant": "standard_orthant", "standard_orthant": "standard_orthant", "full": "full_group", "full_group": "full_group"}
    if spec in aliases:
        return SemigroupDescriptor(g, aliases[spec])
    return io.semigroup_from_doc(_load(spec), g)


def cmd_extend(args, stdin) -> dict:
    doc = _load(args.poly, stdin)
    if io.is_table_doc(doc):
        q = io.function_from_table_doc(doc)
        g = q.descriptor
        J = _semigroup(args, g)
        q = restrict(q, J)
    else:
        p = _newton(doc, args.degree)
        g = p.group
        J = _semigroup(args, g)
        q = restrict(p, J)
    t = _point(args, g)
    decomposition = None
    if args.decomposition:
        d = _load(args.decomposition)
        decomposition = (io.element_from_doc(io._require(d, "u"), g), io.element_from_doc(io._require(d, "v"), g))
    return {"value": io.scalar_to_doc(extend_eval(q, args.degree, t, J, decomposition))}


def cmd_decompose(args, stdin) -> dict:
    raw = _load(args.point)
    size = len(raw) if isinstance(raw, list) else len(io._require(raw, "free"))
    g = _group_for(args, size)
    u, v = orthant_decompose(io.element_from_doc(raw, g))
    return {"u": io.element_to_doc(u), "v": io.element_to_doc(v)}


def cmd_homog(args, stdin) -> dict:
    p = _newton(_load(args.poly, stdin), args.degree)
    return {"parts": [io.poly_to_doc(a) for a in homogeneous_parts(p)]}


def _matrix_or_poly(args, stdin):
    if args.matrix:
        return io.matrix_from_doc(_load(args.matrix, stdin))
    if args.poly:
        p = io.poly_from_doc(_load(args.poly, stdin))
        if isinstance(p, NewtonForm):
            p = newton_to_monomial(p)
        return riss_form_of(p)
    raise InvalidInputError("one of --matrix or --poly is required")


def cmd_inertia(args, stdin) -> dict:
    dec = sylvester_diagonalize(_matrix_or_poly(args, stdin))
    plus, minus, zero = dec.signature
    return {
        "diagonal": [str(d) for d in dec.diagonal],
        "transform": io.matrix_to_doc(dec.transform),
        "signature": {"plus": plus, "minus": minus, "zero": zero},
    }


def cmd_squares(args, stdin) -> dict:
    terms = squares_decomposition(_matrix_or_poly(args, stdin))
    return {"terms": [{"coefficient": str(d), "functional": [str(x) for x in a]} for d, a in terms]}


def cmd_dim(args, stdin) -> dict:
    tor = tuple(io._int_list(_load(args.torsion), "torsion")) if args.torsion else ()
    return {"dim": dim_pn(GroupDescriptor(args.free_rank, tor, args.real_rank), args.degree)}


def cmd_basis(args, stdin) -> dict:
    basis = monomial_basis(args.free_rank, args.degree, verify=True)
    return {"dim": len(basis), "basis": [io.poly_to_doc(b) for b in basis]}


def cmd_split(args, stdin) -> dict:
    p = _newton(_load(args.poly, stdin), args.degree)
    try:
        k1, k2 = (int(x) for x in args.split.split(","))
    except ValueError:
        raise InvalidInputError("--split must look like K1,K2") from None
    terms = tensor_split(p, (k1, k2), args.degree)
    return {"terms": [{"m": t.m, "left": io.poly_to_doc(t.left), "right": io.poly_to_doc(t.right)} for t in terms]}


def cmd_certify_infdim(args, stdin) -> dict:
    c = infinite_dim_certificate(args.n)
    return {
        "n": c.n,
        "rank": c.rank,
        "matrix": c.matrix,
        "witness_points": c.witness_points,
        "degree_one": c.degree_one,
        "additive": c.additive,
    }


def cmd_verify_identities(args, stdin) -> dict:
    return verify_binomial_identities(args.max_m).as_dict()


def cmd_degree_test(args, stdin) -> dict:
    doc = _load(args.poly, stdin)
    if io.is_table_doc(doc):
        try:
            _newton(doc, args.degree)
            passes = True
        except NotAPolynomialError:
            passes = False
    else:
        p = _newton(doc, None)
        passes = degree_test(p.as_function(), args.degree, args.radius, exact=not args.probe)
    return {"degree": args.degree, "passes": passes}


COMMANDS: dict[str, Callable] = {
    "eval": cmd_eval,
    "extend": cmd_extend,
    "decompose": cmd_decompose,
    "homog": cmd_homog,
    "inertia": cmd_inertia,
    "squares": cmd_squares,
    "dim": cmd_dim,
    "basis": cmd_basis,
    "split": cmd_split,
    "certify-infdim": cmd_certify_infdim,
    "verify-identities": cmd_verify_identities,
    "degree-test": cmd_degree_test,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInputError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="diffpoly", description="Exact finite-difference calculus for polynomials on abelian groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def poly_arg(p, required=True):
        p.add_argument("--poly", default="-" if required else None,
                       help="polynomial document (coefficients or value table): path, '-' for stdin, or inline JSON")

    p = sub.add_parser("eval", help="evaluate a polynomial at a point")
    poly_arg(p)
    p.add_argument("--point", required=True, help='point as JSON, e.g. "[-2]" or {"free": [..], "torsion": [..]}')
    p.add_argument("--degree", type=int, help="degree bound (required for tables)")

    p = sub.add_parser("extend", help="extend a polynomial from a semigroup J to G = J - J and evaluate it")
    poly_arg(p)
    p.add_argument("--semigroup", default="orthant", help="orthant, full, or a semigroup document")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--decomposition", help='JSON {"u": point, "v": point} with t = u - v')

    p = sub.add_parser("decompose", help="split a point as u - v with u, v in the standard orthant")
    p.add_argument("--point", required=True)
    p.add_argument("--group", help="group document (needed when the point has torsion coordinates)")

    p = sub.add_parser("homog", help="homogeneous parts a_0..a_n of a polynomial")
    poly_arg(p)
    p.add_argument("--degree", type=int)

    for name, text in (("inertia", "congruence diagonalization and signature"), ("squares", "signed sum of squares")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--matrix", help="symmetric matrix as rows of rational strings")
        p.add_argument("--poly", help="homogeneous degree-2 polynomial document")

    p = sub.add_parser("dim", help="dimension of P^n(G)")
    p.add_argument("--free-rank", type=int, required=True)
    p.add_argument("--real-rank", type=int, default=0)
    p.add_argument("--torsion", help="torsion orders as a JSON list")
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("basis", help="monomial basis of P^n(Z^k)")
    p.add_argument("--free-rank", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("split", help="split a polynomial on Z^(k1+k2) into products of factor polynomials")
    poly_arg(p)
    p.add_argument("--split", required=True, help="K1,K2")
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("certify-infdim", help="rank certificate that P^1 of the sequence group has dimension >= N")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify-identities", help="check the binomial coefficient identities")
    p.add_argument("--max-m", type=int, default=10)

    p = sub.add_parser("degree-test", help="whether a polynomial has degree <= n")
    poly_arg(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--radius", type=int, help="probe radius for the sampled test")
    p.add_argument("--probe", action="store_true", help="use the sampled difference test even for coefficient input")
    return parser


def render(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True) + "\n"


def run(argv: list[str] | None = None, stdin=None, stdout=None) -> int:
    out = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        doc = COMMANDS[args.command](args, stdin)
        code = 0
    except InvalidInputError as exc:
        doc, code = {"error": {"code": exc.code, "message": str(exc)}}, 2
    except DiffPolyError as exc:
        doc, code = {"error": {"code": exc.code, "message": str(exc)}}, 1
    except (ValueError, ZeroDivisionError) as exc:
        doc, code = {"error": {"code": "invalid-argument", "message": str(exc)}}, 1
    out.write(render(doc))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
