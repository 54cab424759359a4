"""Golden CLI cases: name -> (argv, stdin text, expected exit code)."""

import json

SQUARE_TABLE = json.dumps({"free_rank": 1, "table": [[[0], "0"], [[1], "1"], [[2], "4"], [[4], "16"]]})
ST_POLY = json.dumps(
    {"basis": "monomial", "free_rank": 2, "coeffs": [{"index": [1, 1], "value": "1"}, {"index": [1, 0], "value": "1"}, {"index": [0, 1], "value": "1"}]}
)
QUAD_POLY = json.dumps(
    {"basis": "monomial", "free_rank": 2, "coeffs": [{"index": [2, 0], "value": "1"}, {"index": [1, 1], "value": "3"}, {"index": [0, 2], "value": "-2"}]}
)
CUBIC_NEWTON = json.dumps({"basis": "newton", "free_rank": 1, "degree_bound": 3, "coeffs": [{"index": [3], "value": "1/2+1i"}, {"index": [1], "value": "-2"}]})

CASES = {
    "eval_newton": (["eval", "--point", "[-3]"], CUBIC_NEWTON, 0),
    "eval_table": (["eval", "--degree", "2", "--point", "[7]"], SQUARE_TABLE, 0),
    "extend_orthant": (["extend", "--semigroup", "orthant", "--degree", "2", "--point", "[-2]"], SQUARE_TABLE, 0),
    "extend_poly_2d": (["extend", "--degree", "2", "--point", "[-3, 2]"], ST_POLY, 0),
    "extend_generators": (
        ["extend", "--degree", "2", "--point", "[-1]", "--semigroup",
         '{"kind": "generator_list", "generators": [[2], [3]]}', "--decomposition", '{"u": [2], "v": [3]}'],
        json.dumps({"basis": "monomial", "free_rank": 1, "coeffs": [{"index": [2], "value": "1"}]}),
        0,
    ),
    "extend_no_decomposition": (
        ["extend", "--degree", "2", "--point", "[-1]", "--semigroup", '{"kind": "generator_list", "generators": [[2], [3]]}'],
        json.dumps({"basis": "monomial", "free_rank": 1, "coeffs": [{"index": [2], "value": "1"}]}),
        1,
    ),
    "decompose": (["decompose", "--point", "[3, -2, 0]"], "", 0),
    "decompose_torsion": (["decompose", "--point", '{"free": [-4], "torsion": [5]}', "--group", '{"free_rank": 1, "torsion_orders": [3]}'], "", 0),
    "homog": (["homog", "--degree", "3"], CUBIC_NEWTON, 0),
    "inertia_matrix": (["inertia", "--matrix", '[["0", "1"], ["1", "0"]]'], "", 0),
    "inertia_poly": (["inertia", "--poly", "-"], QUAD_POLY, 0),
    "squares_poly": (["squares", "--poly", "-"], QUAD_POLY, 0),
    "squares_matrix": (["squares", "--matrix", '[["2", "1", "0"], ["1", "2", "1"], ["0", "1", "0"]]'], "", 0),
    "dim": (["dim", "--free-rank", "2", "--real-rank", "0", "--degree", "2"], "", 0),
    "dim_torsion": (["dim", "--free-rank", "1", "--real-rank", "2", "--torsion", "[2, 3]", "--degree", "3"], "", 0),
    "basis": (["basis", "--free-rank", "2", "--degree", "2"], "", 0),
    "split": (["split", "--split", "1,1", "--degree", "2"], ST_POLY, 0),
    "certify_infdim": (["certify-infdim", "--n", "4"], "", 0),
    "verify_identities": (["verify-identities", "--max-m", "10"], "", 0),
    "degree_test_pass": (["degree-test", "--degree", "3"], CUBIC_NEWTON, 0),
    "degree_test_fail": (["degree-test", "--degree", "2", "--probe"], CUBIC_NEWTON, 0),
    "degree_test_table": (["degree-test", "--degree", "1"], SQUARE_TABLE, 0),
    "error_malformed_json": (["eval", "--point", "[1]"], "{not json", 2),
    "error_unknown_command": (["frobnicate"], "", 2),
    "error_not_homogeneous": (["inertia", "--poly", "-"], ST_POLY, 1),
    "error_table_not_polynomial": (["eval", "--degree", "1", "--point", "[0]"], SQUARE_TABLE, 1),
}
