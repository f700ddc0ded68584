"""Deterministic text interchange for the integer programs.

Two formats:

* "lp": a small LP-style dialect. Variables keep their structured names
  (x_i_j_k, y_j_l, u_j_j2, p_j), every variable gets an explicit bounds
  line in declaration order, every constraint keeps its provenance tag as
  the row name. Grammar, one construct per line:

      \\ comment
      Minimize | Maximize
       obj: <int> <name> [+|- <int> <name>]...
      Subject To
       <tag>: <expr> <= | = | >= <int>
      Bounds
       <int> <= <name> <= <int>
      Integers
       <name> ...
      End

* "mps": free-format MPS with an OBJSENSE section, row names R<n> in
  constraint order, all columns integer via INTORG/INTEND markers.

Both exports are byte-stable: export -> parse -> export reproduces the
file exactly.
"""

from __future__ import annotations

from .model import IntegerProgram, LinearConstraint, VarRef

FORMATS = ("lp", "mps")


class ProgramParseError(ValueError):
    """Interchange text does not parse."""


def export_program(program: IntegerProgram, fmt: str) -> str:
    if fmt == "lp":
        return _export_lp(program)
    if fmt == "mps":
        return _export_mps(program)
    raise ValueError(f"unknown format {fmt!r}")


def parse_program(text: str, fmt: str) -> IntegerProgram:
    if fmt == "lp":
        return _parse_lp(text)
    if fmt == "mps":
        return _parse_mps(text)
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# LP dialect

def _expr(terms) -> str:
    parts = []
    for coef, var in terms:
        if not parts:
            parts.append(f"{coef} {var.name}")
        elif coef < 0:
            parts.append(f"- {-coef} {var.name}")
        else:
            parts.append(f"+ {coef} {var.name}")
    return " ".join(parts) if parts else "0 zero"


def _export_lp(program: IntegerProgram) -> str:
    out = []
    out.append("\\ tantrix 0-1 program")
    out.append("Minimize" if program.objective_sense == "min" else "Maximize")
    out.append(f" obj: {_expr(program.objective)}")
    out.append("Subject To")
    for con in program.constraints:
        out.append(f" {con.tag}: {_expr(con.terms)} {con.sense} {con.rhs}")
    out.append("Bounds")
    for var, lo, hi in zip(program.vars, program.lower, program.upper):
        out.append(f" {lo} <= {var.name} <= {hi}")
    out.append("Integers")
    line = ""
    for var in program.vars:
        if len(line) + len(var.name) + 1 > 78:
            out.append(" " + line.strip())
            line = ""
        line += var.name + " "
    if line.strip():
        out.append(" " + line.strip())
    out.append("End")
    return "\n".join(out) + "\n"


def _parse_terms(tokens: list[str]):
    terms = []
    sign = 1
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok == "+":
            sign = 1
            i += 1
        elif tok == "-":
            sign = -1
            i += 1
        else:
            coef = sign * int(tok)
            var = VarRef.parse(tokens[i + 1])
            if (coef, var) != (0, VarRef("zero", ())):
                terms.append((coef, var))
            sign = 1
            i += 2
    return tuple(t for t in terms if t[1].kind != "zero")


def _parse_lp(text: str) -> IntegerProgram:
    sense = None
    objective = ()
    constraints: list[LinearConstraint] = []
    vars_order: list[VarRef] = []
    lower: list[int] = []
    upper: list[int] = []
    section = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("\\"):
            continue
        if line in ("Minimize", "Maximize"):
            sense = "min" if line == "Minimize" else "max"
            section = "objective"
            continue
        if line == "Subject To":
            section = "rows"
            continue
        if line == "Bounds":
            section = "bounds"
            continue
        if line == "Integers":
            section = "integers"
            continue
        if line == "End":
            break
        if section == "objective":
            if not line.startswith("obj:"):
                raise ProgramParseError(f"expected objective, got {line!r}")
            objective = _parse_terms(line[4:].split())
        elif section == "rows":
            if ":" not in line:
                raise ProgramParseError(f"bad constraint line {line!r}")
            tag, rest = line.split(":", 1)
            tokens = rest.split()
            sense_pos = next(
                (i for i, t in enumerate(tokens) if t in ("<=", "=", ">=")),
                None,
            )
            if sense_pos is None:
                raise ProgramParseError(f"no sense in {line!r}")
            terms = _parse_terms(tokens[:sense_pos])
            constraints.append(LinearConstraint(
                terms, tokens[sense_pos], int(tokens[sense_pos + 1]), tag))
        elif section == "bounds":
            tokens = line.split()
            if len(tokens) != 5 or tokens[1] != "<=" or tokens[3] != "<=":
                raise ProgramParseError(f"bad bounds line {line!r}")
            lower.append(int(tokens[0]))
            vars_order.append(VarRef.parse(tokens[2]))
            upper.append(int(tokens[4]))
        elif section == "integers":
            pass  # all variables are integer; order comes from Bounds
        else:
            raise ProgramParseError(f"unexpected line {line!r}")
    if sense is None:
        raise ProgramParseError("missing objective sense")
    return IntegerProgram(
        vars=tuple(vars_order),
        lower=tuple(lower),
        upper=tuple(upper),
        constraints=tuple(constraints),
        objective_sense=sense,
        objective=objective,
    )


# ---------------------------------------------------------------------------
# MPS, free format

_SENSE_TO_MPS = {"<=": "L", ">=": "G", "=": "E"}
_MPS_TO_SENSE = {v: k for k, v in _SENSE_TO_MPS.items()}


def _export_mps(program: IntegerProgram) -> str:
    out = []
    out.append("NAME          TANTRIX")
    out.append("OBJSENSE")
    out.append("    MAX" if program.objective_sense == "max" else "    MIN")
    out.append("ROWS")
    out.append(" N  COST")
    for r, con in enumerate(program.constraints):
        out.append(f" {_SENSE_TO_MPS[con.sense]}  R{r}")
    out.append("COLUMNS")
    out.append("    MARKER                 'MARKER'                 'INTORG'")
    obj_by_var = {var: coef for coef, var in program.objective}
    rows_by_var: dict[VarRef, list[tuple[str, int]]] = {}
    for r, con in enumerate(program.constraints):
        for coef, var in con.terms:
            rows_by_var.setdefault(var, []).append((f"R{r}", coef))
    for var in program.vars:
        if var in obj_by_var:
            out.append(f"    {var.name}  COST  {obj_by_var[var]}")
        for row_name, coef in rows_by_var.get(var, ()):
            out.append(f"    {var.name}  {row_name}  {coef}")
    out.append("    MARKER                 'MARKER'                 'INTEND'")
    out.append("RHS")
    for r, con in enumerate(program.constraints):
        out.append(f"    RHS  R{r}  {con.rhs}")
    out.append("BOUNDS")
    for var, lo, hi in zip(program.vars, program.lower, program.upper):
        out.append(f" LO BND  {var.name}  {lo}")
        out.append(f" UP BND  {var.name}  {hi}")
    out.append("ENDATA")
    return "\n".join(out) + "\n"


def _parse_mps(text: str) -> IntegerProgram:
    section = None
    sense = "min"
    row_sense: dict[str, str] = {}
    row_order: list[str] = []
    row_terms: dict[str, list[tuple[int, VarRef]]] = {}
    obj_terms: list[tuple[int, VarRef]] = []
    rhs: dict[str, int] = {}
    vars_order: list[VarRef] = []
    seen_vars: set[VarRef] = set()
    bounds_lo: dict[VarRef, int] = {}
    bounds_hi: dict[VarRef, int] = {}
    for raw in text.splitlines():
        if not raw.strip() or raw.startswith("*"):
            continue
        if not raw.startswith(" "):
            head = raw.split()[0]
            if head == "NAME":
                section = None
            elif head in ("OBJSENSE", "ROWS", "COLUMNS", "RHS", "BOUNDS", "ENDATA"):
                section = head
            else:
                raise ProgramParseError(f"unknown section {head!r}")
            continue
        tokens = raw.split()
        if section == "OBJSENSE":
            sense = "max" if tokens[0] == "MAX" else "min"
        elif section == "ROWS":
            kind, name = tokens
            if kind == "N":
                continue
            row_sense[name] = _MPS_TO_SENSE[kind]
            row_order.append(name)
            row_terms[name] = []
        elif section == "COLUMNS":
            if "'MARKER'" in tokens:
                continue
            name, row, coef = tokens
            var = VarRef.parse(name)
            if var not in seen_vars:
                seen_vars.add(var)
                vars_order.append(var)
            if row == "COST":
                obj_terms.append((int(coef), var))
            else:
                row_terms[row].append((int(coef), var))
        elif section == "RHS":
            _, row, value = tokens
            rhs[row] = int(value)
        elif section == "BOUNDS":
            kind, _, name, value = tokens
            var = VarRef.parse(name)
            if var not in seen_vars:
                seen_vars.add(var)
                vars_order.append(var)
            if kind == "LO":
                bounds_lo[var] = int(value)
            elif kind == "UP":
                bounds_hi[var] = int(value)
            else:
                raise ProgramParseError(f"unsupported bound kind {kind!r}")
        elif section == "ENDATA":
            break
    constraints = tuple(
        LinearConstraint(tuple(row_terms[name]), row_sense[name],
                         rhs.get(name, 0), name)
        for name in row_order
    )
    return IntegerProgram(
        vars=tuple(vars_order),
        lower=tuple(bounds_lo.get(v, 0) for v in vars_order),
        upper=tuple(bounds_hi.get(v, 0) for v in vars_order),
        constraints=constraints,
        objective_sense=sense,
        objective=tuple(obj_terms),
    )
