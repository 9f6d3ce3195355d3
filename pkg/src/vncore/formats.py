"""The on-disk structure format: a JSON document of sparse structure
constants with string coefficients, plus the twist-element file.

Emission is canonical (fixed key order, sparse entries sorted, zero terms
dropped) so emit -> parse -> emit is byte-identical.
"""

import json

from .catalog import TwistData, invert_in_tensor_square
from .errors import BadTwist, ParseError, ShapeError
from .field import PrimeField, QQ
from .linmap import LinMap
from .structures import build_structure

_REQUIRED = ("name", "field", "dim", "mul", "comul")
_OPTIONAL = ("basis", "S", "unit", "counit", "alpha", "beta")


def _parse_field(spec):
    if not isinstance(spec, dict) or "type" not in spec:
        raise ParseError("field must be an object with a 'type' member")
    if spec["type"] == "Q":
        if set(spec) != {"type"}:
            raise ParseError("field Q takes no extra members")
        return QQ
    if spec["type"] == "Fp":
        if set(spec) != {"type", "p"} or not isinstance(spec.get("p"), int):
            raise ParseError("field Fp needs an integer member 'p'")
        return PrimeField(spec["p"])
    raise ParseError(f"unknown field type {spec['type']!r}")


def _sparse_map(field, n, entries, src_rank, tgt_rank, index_count, place,
                what):
    """Accumulate sparse [i..., coeff] rows into a dense LinMap."""
    acc = {}
    for row in entries:
        if not isinstance(row, list) or len(row) != index_count + 1:
            raise ParseError(f"{what}: entry {row!r} malformed")
        *idx, coeff = row
        for v in idx:
            if not isinstance(v, int) or not 0 <= v < n:
                raise ShapeError(f"{what}: index {v} out of range [0, {n})")
        if not isinstance(coeff, str):
            raise ParseError(f"{what}: coefficient must be a string")
        pos = place(*idx)
        c = field.parse(coeff)
        acc[pos] = field.add(acc[pos], c) if pos in acc else c
    ents = [field.zero] * (n ** tgt_rank * n ** src_rank)
    for pos, c in acc.items():
        ents[pos] = c
    return LinMap.from_entries(field, n, src_rank, tgt_rank, ents)


def _dense_vector(field, n, values, what):
    if not isinstance(values, list) or len(values) != n:
        raise ParseError(f"{what}: expected an array of {n} coefficients")
    for v in values:
        if not isinstance(v, str):
            raise ParseError(f"{what}: coefficient must be a string")
    return [field.parse(v) for v in values]


def structure_from_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e}") from e
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    unknown = set(doc) - set(_REQUIRED) - set(_OPTIONAL)
    if unknown:
        raise ParseError(f"unknown members: {sorted(unknown)}")
    missing = [k for k in _REQUIRED if k not in doc]
    if missing:
        raise ParseError(f"missing members: {missing}")
    if not isinstance(doc["name"], str):
        raise ParseError("name must be a string")
    field = _parse_field(doc["field"])
    n = doc["dim"]
    if not isinstance(n, int) or n < 1:
        raise ParseError("dim must be a positive integer")
    basis = None
    if "basis" in doc:
        if (not isinstance(doc["basis"], list) or len(doc["basis"]) != n
                or not all(isinstance(b, str) for b in doc["basis"])):
            raise ParseError(f"basis must be an array of {n} strings")
        basis = tuple(doc["basis"])
    mu = _sparse_map(field, n, doc["mul"], 2, 1, 3,
                     lambda i, j, k: k * n * n + i * n + j, "mul")
    delta = _sparse_map(field, n, doc["comul"], 1, 2, 3,
                        lambda k, i, j: (i * n + j) * n + k, "comul")
    S = None
    if "S" in doc:
        S = _sparse_map(field, n, doc["S"], 1, 1, 2,
                        lambda i, j: j * n + i, "S")
    kw = {}
    for key, attr in (("unit", "eta"), ("alpha", "alpha"), ("beta", "beta")):
        if key in doc:
            vec = _dense_vector(field, n, doc[key], key)
            kw[attr] = LinMap.from_entries(field, n, 0, 1, vec)
    if "counit" in doc:
        vec = _dense_vector(field, n, doc["counit"], "counit")
        kw["eps"] = LinMap.from_entries(field, n, 1, 0, vec)
    return build_structure(field, n, mu, delta, S=S, name=doc["name"],
                           basis=basis, **kw)


def _field_doc(field):
    if isinstance(field, PrimeField):
        return {"type": "Fp", "p": field.p}
    return {"type": "Q"}


def _mul_entries(s):
    n, f = s.n, s.field
    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                c = s.mu.entry(k, i * n + j)
                if not f.eq(c, f.zero):
                    out.append([i, j, k, f.render(c)])
    return out


def _comul_entries(s):
    n, f = s.n, s.field
    out = []
    for k in range(n):
        for i in range(n):
            for j in range(n):
                c = s.delta.entry(i * n + j, k)
                if not f.eq(c, f.zero):
                    out.append([k, i, j, f.render(c)])
    return out


def _s_entries(s):
    n, f = s.n, s.field
    out = []
    for i in range(n):
        for j in range(n):
            c = s.S.entry(j, i)
            if not f.eq(c, f.zero):
                out.append([i, j, f.render(c)])
    return out


def _inline(x):
    return json.dumps(x, separators=(", ", ": "))


def structure_to_json(s):
    """Canonical text: fixed key order, sparse entries sorted and one per
    line, zero coefficients dropped.  emit -> parse -> emit is byte-identical.
    """
    f = s.field
    doc = {"name": s.name, "field": _field_doc(f), "dim": s.n}
    if s.basis is not None:
        doc["basis"] = list(s.basis)
    doc["mul"] = _mul_entries(s)
    doc["comul"] = _comul_entries(s)
    if s.S is not None:
        doc["S"] = _s_entries(s)
    if s.eta is not None:
        doc["unit"] = [f.render(x) for x in s.eta.column(0)]
    if s.eps is not None:
        doc["counit"] = [f.render(s.eps.entry(0, i)) for i in range(s.n)]
    if s.alpha is not None:
        doc["alpha"] = [f.render(x) for x in s.alpha.column(0)]
    if s.beta is not None:
        doc["beta"] = [f.render(x) for x in s.beta.column(0)]
    lines = ["{"]
    keys = list(doc)
    for pos, key in enumerate(keys):
        val = doc[key]
        comma = "," if pos < len(keys) - 1 else ""
        if key in ("mul", "comul", "S") and val:
            lines.append(f'  "{key}": [')
            for i, row in enumerate(val):
                rc = "," if i < len(val) - 1 else ""
                lines.append(f"    {_inline(row)}{rc}")
            lines.append(f"  ]{comma}")
        else:
            lines.append(f'  "{key}": {_inline(val)}{comma}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_structure(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    return structure_from_json(text)


def write_structure(s, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(structure_to_json(s))


def parse_twist(path, s):
    """Read a twist file {"F": [...], "F_inv"?: [...]} against structure s;
    the inverse is computed by exact solve when absent."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e}") from e
    if not isinstance(doc, dict):
        raise ParseError("twist file must be an object")
    unknown = set(doc) - {"F", "F_inv"}
    if unknown:
        raise ParseError(f"unknown members: {sorted(unknown)}")
    if "F" not in doc:
        raise ParseError("twist file needs member 'F'")
    nn = s.n * s.n
    def vec(key):
        vals = doc[key]
        if not isinstance(vals, list) or len(vals) != nn or \
                not all(isinstance(v, str) for v in vals):
            raise ParseError(f"{key} must be an array of {nn} coefficients")
        return LinMap.from_entries(s.field, s.n, 0, 2,
                                   [s.field.parse(v) for v in vals])
    F = vec("F")
    if "F_inv" in doc:
        F_inv = vec("F_inv")
    else:
        F_inv = invert_in_tensor_square(s, F)
        if F_inv is None:
            raise BadTwist("F is not invertible in A (x) A")
    return TwistData(F=F, F_inv=F_inv)
