"""Tables and listings transcribed from the printed examples, in their own naming."""

EX26_NAMES = "a b c d e".split()
EX26_TABLE = [
    "a b c d e",
    "a b c d e",
    "c c c c c",
    "d d d d d",
    "c c c c c",
]
EX26_PAIRS = [("a", "a"), ("b", "b"), ("c", "a"), ("c", "b"), ("c", "c"), ("c", "d"),
              ("c", "e"), ("d", "d"), ("e", "d"), ("e", "b"), ("e", "e")]
EX26_BIIDEALS = ["c", "ce", "cde", "acde", "bcde", "abcde"]
EX26_BTABLE = [
    [1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1],
    [3, 3, 3, 3, 3, 3],
    [3, 3, 3, 4, 5, 6],
    [3, 3, 3, 4, 5, 6],
    [3, 3, 3, 4, 5, 6],
]
# egg-boxes: D-class -> rows (R-classes) -> cells (H-classes)
EX26_EGGBOX = [[[["a"], ["b"]]], [[["c"]], [["d"]], [["e"]]]]
# D-classes of B(S), 1-based bi-ideal numbers
EX26_B_DCLASSES = [{2}, {4, 5, 6}, {1, 3}]

T2_PRINTED_ORDER = ["(1,1)", "(2,2)", "(1,2)", "(2,1)"]
T2_TABLE = [
    ["(1,1)", "(2,2)", "(1,1)", "(2,2)"],
    ["(1,1)", "(2,2)", "(2,2)", "(1,1)"],
    ["(1,1)", "(2,2)", "(1,2)", "(2,1)"],
    ["(1,1)", "(2,2)", "(2,1)", "(1,2)"],
]
T2_ORDER = {("(1,1)", "(1,1)"), ("(2,2)", "(2,2)"), ("(1,2)", "(1,2)"), ("(2,1)", "(2,1)"),
            ("(1,1)", "(1,2)"), ("(1,1)", "(2,1)"), ("(2,2)", "(1,2)"), ("(2,2)", "(2,1)")}
T2_BIIDEALS = [{"(1,1)"}, {"(2,2)"}, {"(1,1)", "(2,2)"}, set(T2_PRINTED_ORDER)]
T2_BTABLE = [
    [1, 2, 3, 3],
    [1, 2, 3, 3],
    [1, 2, 3, 3],
    [1, 2, 3, 4],
]
T2_EGGBOX = [[[["(1,1)"], ["(2,2)"]]], [[["(1,2)", "(2,1)"]]]]
T2_B_EGGBOX = [[[[1], [2], [3]]], [[[4]]]]
T2_LPRIME = [{1}, {2}, {3}, {4}]
T2_RPRIME = [{1, 2, 3}, {4}]

# middle D-class of T3: each row is an R-class, each entry an H-cell
T3_MIDDLE = [
    [{"(1,2,2)", "(2,1,1)"}, {"(1,3,3)", "(3,1,1)"}, {"(2,3,3)", "(3,2,2)"}],
    [{"(2,1,2)", "(1,2,1)"}, {"(3,1,3)", "(1,3,1)"}, {"(3,2,3)", "(2,3,2)"}],
    [{"(2,2,1)", "(1,1,2)"}, {"(3,3,1)", "(1,1,3)"}, {"(3,3,2)", "(2,2,3)"}],
]
T3_CONSTANTS = {"(1,1,1)", "(2,2,2)", "(3,3,3)"}
T3_PERMUTATIONS = {"(1,2,3)", "(2,3,1)", "(3,1,2)", "(1,3,2)", "(3,2,1)", "(2,1,3)"}
