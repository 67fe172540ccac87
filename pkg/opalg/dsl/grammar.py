# opalg/dsl/grammar.py

"""
Lark grammar for the operated-polynomial DSL.

    gens x y z ;
    order qc ;
    params d = 3/5, lambda = 0 ;
    use "new-identity-C", "P1" ;
    opi rb(x1, x2) = L(x1)*L(x2) - L(L(x1)*x2) - L(x1*L(x2)) - lambda*L(x1*x2) ;
    L(x)*L^2(y) ;

Products need an explicit `*`; `L^k(...)` is k nested brackets.
"""

GRAMMAR = r"""
    program: statement*
    poly_only: poly

    ?statement: gens_stmt
              | order_stmt
              | params_stmt
              | use_stmt
              | opi_stmt
              | expr_stmt

    gens_stmt: "gens" NAME+ ";"
    order_stmt: "order" NAME ";"
    params_stmt: "params" binding ("," binding)* ";"
    binding: NAME "=" SIGN? NUMBER
    use_stmt: "use" ESCAPED_STRING ("," ESCAPED_STRING)* ";"
    opi_stmt: "opi" NAME "(" NAME ("," NAME)* ")" "=" poly ";"
    expr_stmt: poly ";"

    poly: SIGN? term (SIGN term)*
    term: factor ("*" factor)*

    ?factor: NUMBER                          -> number
           | NAME                            -> name
           | OP "(" poly ")"                 -> operator
           | OP "^" NUMBER "(" poly ")"      -> operator
           | OP "(" ")"                      -> empty_operator
           | OP "^" NUMBER "(" ")"           -> empty_operator
           | "(" poly ")"                    -> group

    OP: "L"
    SIGN: "+" | "-"
    NUMBER: /\d+(\/\d+)?/
    NAME: /[A-Za-z_][A-Za-z0-9_]*/
    COMMENT: /#[^\n]*/

    %import common.ESCAPED_STRING
    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

# Friendly names for lark terminal ids in "expected ..." diagnostics.
TERMINAL_NAMES = {
    "NAME": "a name",
    "NUMBER": "a number",
    "SIGN": "'+' or '-'",
    "OP": "'L'",
    "LPAR": "'('",
    "RPAR": "')'",
    "STAR": "'*'",
    "SEMICOLON": "';'",
    "COMMA": "','",
    "EQUAL": "'='",
    "CIRCUMFLEX": "'^'",
    "ESCAPED_STRING": "a quoted string",
    "$END": "end of input",
}
