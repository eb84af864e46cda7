"""Command-line front end.

Elements are entered in a small expression language over the algebra
generators and parameters,

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := 'T'uint | 'L'uint | 'xi' | 'Q'uint | 'x' | rational | '(' expr ')'

with rationals written "p/q" and `x` available in generic (deformed) mode.
Subcommands compute single values (`dim`, `mult`, `trace`), dump structured
data (`gram`, `seminormal`, `dual-basis`, `schur-cocenter`,
`schur-elements`), or drive the verification suites (`verify`); the process
exits 0 exactly when every check requested passed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cellular import CellularBasis
from .combinat import Multicomposition, Permutation
from .hecke import HeckeAlgebra, HeckeElement
from .schur import SchurContext
from .seminormal import DUAL_FACTOR_CONVENTION, SeminormalBasis
from .traceform import cellular_gram, gram_matrix, tau
from .verify import config_echo, make_algebra, reports_pass, run_suites, suite_names

__all__ = ["main", "run", "parse_element", "serialize_element", "ParseError"]

MAX_EXPONENT = 10 ** 6


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


# ---------------------------------------------------------------------------
# expression language
# ---------------------------------------------------------------------------

def _tokenize(src: str):
    out = []
    i, m = 0, len(src)
    while i < m:
        c = src[i]
        if c.isspace():
            i += 1
            continue
        if c in "+-*^()":
            out.append((c, c, i))
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < m and src[j].isdigit():
                j += 1
            if j < m and src[j] == "/":
                k = j + 1
                while k < m and src[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise ParseError("malformed rational literal", j)
                out.append(("num", src[i:k], i))
                i = k
            else:
                out.append(("num", src[i:j], i))
                i = j
            continue
        if c in "TLQ":
            j = i + 1
            while j < m and src[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError(f"generator '{c}' needs an index", i)
            out.append((c, src[i + 1:j], i))
            i = j
            continue
        if src.startswith("xi", i):
            out.append(("xi", "xi", i))
            i += 2
            continue
        if c == "x":
            out.append(("x", "x", i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    out.append(("end", "", m))
    return out


class _Parser:
    def __init__(self, tokens, H: HeckeAlgebra):
        self.toks = tokens
        self.pos = 0
        self.H = H

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1] or 'end'}", tok[2])
        self.pos += 1
        return tok

    def expr(self) -> HeckeElement:
        acc = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> HeckeElement:
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> HeckeElement:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("num")
            if "/" in tok[1]:
                raise ParseError("exponent must be a nonnegative integer", tok[2])
            e = int(tok[1])
            if e > MAX_EXPONENT:
                raise ParseError("exponent overflow", tok[2])
            out = self.H.one()
            for _ in range(e):
                out = out * base
            return out
        return base

    def atom(self) -> HeckeElement:
        H = self.H
        kind, text, pos = self.take()
        if kind == "T":
            i = int(text)
            if not 1 <= i <= H.n - 1:
                raise ParseError(f"T{i} out of range 1..{H.n - 1}", pos)
            return H.T(i)
        if kind == "L":
            k = int(text)
            if not 1 <= k <= H.n:
                raise ParseError(f"L{k} out of range 1..{H.n}", pos)
            return H.L(k)
        if kind == "Q":
            j = int(text)
            if not 1 <= j <= H.ell:
                raise ParseError(f"Q{j} out of range 1..{H.ell}", pos)
            return H.Q[j - 1] * H.one()
        if kind == "xi":
            return H.xi * H.one()
        if kind == "x":
            x = getattr(H.field, "x", None)
            if x is None:
                raise ParseError("'x' needs generic (deformed) parameters", pos)
            return x * H.one()
        if kind == "num":
            return H.scalar(text) * H.one()
        if kind == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected token {text or 'end'}", pos)


def parse_element(src: str, H: HeckeAlgebra) -> HeckeElement:
    """Evaluate an expression string to a normal-form algebra element."""
    p = _Parser(_tokenize(src), H)
    out = p.expr()
    p.take("end")
    return out


def serialize_element(elem: HeckeElement) -> str:
    """A grammar string that parses back to the element (the coefficients
    must be base-field scalars, i.e. non-deformed configurations)."""
    H = elem.algebra
    pos_parts, neg_parts = [], []
    for (exps, img) in sorted(elem.data):
        c = elem.data[(exps, img)]
        text = str(c)
        neg = text.startswith("-")
        if neg:
            text = text[1:]
        if any(ch not in "0123456789/" for ch in text):
            raise ValueError(f"coefficient {c!r} has no literal form")
        bits = [text]
        for k, e in enumerate(exps, start=1):
            if e == 1:
                bits.append(f"L{k}")
            elif e > 1:
                bits.append(f"L{k}^{e}")
        for i in Permutation(img).reduced_word():
            bits.append(f"T{i}")
        (neg_parts if neg else pos_parts).append("*".join(bits))
    if not pos_parts and not neg_parts:
        return "0"
    out = " + ".join(pos_parts) if pos_parts else "0"
    for p in neg_parts:
        out += " - " + p
    return out


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None)
    common.add_argument("--ell", type=int, default=None)
    common.add_argument("--xi", default=None)
    common.add_argument("--Q", default=None,
                        help="comma-separated cyclotomic parameters "
                             "(default 0,1,..)")
    common.add_argument("--field", default="rat", help="rat or gf:p")
    common.add_argument("--generic", action="store_true",
                        help="adjoin x and deform the parameters")
    common.add_argument("--comps", default="full",
                        help="full, partitions, or file:PATH (JSON list)")
    common.add_argument("--out", default=None, help="write the report here")
    common.add_argument("--format", default="json", choices=["json", "csv"])

    ap = argparse.ArgumentParser(
        prog="cyclohecke",
        description="exact computations in cyclotomic Hecke and Schur algebras")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("dim", parents=[common])
    p = sub.add_parser("mult", parents=[common])
    p.add_argument("left")
    p.add_argument("right")
    p = sub.add_parser("trace", parents=[common])
    p.add_argument("element")
    p = sub.add_parser("gram", parents=[common])
    p.add_argument("kind", choices=["mn", "monomial"])
    sub.add_parser("seminormal", parents=[common])
    sub.add_parser("dual-basis", parents=[common])
    sub.add_parser("schur-cocenter", parents=[common])
    sub.add_parser("schur-elements", parents=[common])
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("suite", choices=suite_names())
    p.add_argument("--defaults", action="store_true",
                   help="run the built-in configuration matrix even when "
                        "parameters are given")
    return ap


def _config_from_args(args) -> dict:
    n = 2 if args.n is None else args.n
    ell = 2 if args.ell is None else args.ell
    xi = "1" if args.xi is None else args.xi
    Q = args.Q
    if Q is None:
        Q = ",".join(str(i) for i in range(ell))
    cfg = {
        "n": n,
        "ell": ell,
        "xi": xi,
        "Q": tuple(q.strip() for q in Q.split(",")),
        "field": args.field,
        "generic": args.generic,
    }
    if len(cfg["Q"]) != ell:
        raise SystemExit(f"error: --Q needs {ell} comma-separated values")
    return cfg


def _comps_arg(spec: str):
    if spec in ("full", "partitions"):
        return spec
    if spec.startswith("file:"):
        with open(spec[5:], "r", encoding="utf-8") as fh:
            data = json.load(fh)
        return [Multicomposition(tuple(tuple(c) for c in mu)) for mu in data]
    raise SystemExit(f"error: --comps must be full, partitions or file:PATH")


def _emit(args, payload, csv_rows=None) -> None:
    if args.format == "csv":
        if csv_rows is None:
            raise SystemExit("error: --format csv is only available for gram")
        text = "\n".join(",".join(str(v) for v in row) for row in csv_rows) + "\n"
    else:
        text = json.dumps(payload, indent=2, default=str) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _need_seminormal(H: HeckeAlgebra) -> SeminormalBasis:
    try:
        return SeminormalBasis(H)
    except ZeroDivisionError as e:
        raise SystemExit(
            f"error: contents do not separate at these parameters ({e}); "
            f"pass --generic") from None


def run(argv) -> int:
    args = _build_parser().parse_args(argv)
    cfg = _config_from_args(args)
    cmd = args.command

    if cmd == "verify":
        # explicit parameters run a single configuration; otherwise (or with
        # --defaults) the suite's built-in matrix runs
        explicit = any(v is not None for v in (args.n, args.ell, args.xi, args.Q))
        config = None
        if explicit and not args.defaults:
            config = dict(cfg)
            if args.suite in ("schur", "cocenter", "all"):
                config["comps"] = _comps_arg(args.comps)
        reports = run_suites(args.suite, config)
        ok = reports_pass(reports)
        _emit(args, {"status": "pass" if ok else "fail", "reports": reports})
        return 0 if ok else 1

    H = make_algebra(cfg)

    if cmd == "dim":
        _emit(args, {"config": config_echo(cfg), "dim": H.dim})
        return 0
    if cmd == "mult":
        try:
            prod = parse_element(args.left, H) * parse_element(args.right, H)
        except ParseError as e:
            print(f"error: {e}", file=sys.stderr)
            return 1
        _emit(args, {"config": config_echo(cfg), "product": repr(prod),
                     "terms": prod.to_json()})
        return 0
    if cmd == "trace":
        try:
            val = tau(parse_element(args.element, H))
        except ParseError as e:
            print(f"error: {e}", file=sys.stderr)
            return 1
        _emit(args, {"config": config_echo(cfg), "trace": str(val)})
        return 0
    if cmd == "gram":
        if args.kind == "mn":
            labels, G = cellular_gram(CellularBasis(H))
            names = [f"{lam!r}|{s!r}|{t!r}" for (lam, s, t) in labels]
        else:
            basis = list(H.basis())
            G = gram_matrix(basis, basis)
            names = [str(k) for k in H.basis_keys()]
        payload = {"config": config_echo(cfg), "kind": args.kind,
                   "labels": names,
                   "matrix": [[str(v) for v in row] for row in G]}
        csv_rows = [[""] + names] + [[names[i]] + [str(v) for v in row]
                                     for i, row in enumerate(G)]
        _emit(args, payload, csv_rows)
        return 0
    if cmd == "seminormal":
        sn = _need_seminormal(H)
        table = {}
        for t, (g, gc) in sn.gamma_table().items():
            table[repr(t)] = {"gamma": str(g), "gamma_check": str(gc)}
        shapes = sorted({lam for (lam, _, _) in sn.pairs()},
                        key=lambda lam: repr(lam))
        _emit(args, {"config": config_echo(cfg),
                     "dual_factor_convention": DUAL_FACTOR_CONVENTION,
                     "gamma": table,
                     "schur_elements": {repr(lam): str(sn.schur_element(lam))
                                        for lam in shapes}})
        return 0
    if cmd == "dual-basis":
        sn = _need_seminormal(H)
        fams = {}
        for kind in ("B", "Bcheck"):
            fam = sn.distinguished_family(kind)
            fams[kind] = {
                f"{s!r}|{t!r}": {f"{u!r}|{v!r}": [str(c) for c in cs]
                                 for (u, v), cs in corr.items()}
                for (s, t), (_, corr) in fam.items()}
        _, P = sn.pairing_matrix()
        one, zero = H.field_one, H.field_zero
        deviations = [(i, j, str(v)) for i, row in enumerate(P)
                      for j, v in enumerate(row)
                      if v != (one if i == j else zero)]
        _emit(args, {"config": config_echo(cfg),
                     "dual_factor_convention": DUAL_FACTOR_CONVENTION,
                     "corrections": fams,
                     "pairing_is_identity": not deviations,
                     "pairing_deviations": deviations})
        return 0 if not deviations else 1
    if cmd == "schur-cocenter":
        S = SchurContext(H, comps=_comps_arg(args.comps))
        decs = {}
        for lab in S.labels:
            dec = S.cocenter_decompose(S.phi(*lab))
            decs["|".join(repr(p) for p in lab)] = {
                repr(lam): str(c) for lam, c in dec.coefficients.items() if c}
        _emit(args, {"config": config_echo(cfg),
                     "comps": args.comps,
                     "dim_schur": S.dimension,
                     "num_shapes": len(S.shapes),
                     "cocenter_dim": S.cocenter_dim(),
                     "commutator_rank": S.commutator_span().dim,
                     "decompositions": decs})
        return 0
    if cmd == "schur-elements":
        sn = _need_seminormal(H)
        shapes = sorted({lam for (lam, _, _) in sn.pairs()},
                        key=lambda lam: repr(lam))
        _emit(args, {"config": config_echo(cfg),
                     "schur_elements": {repr(lam): str(sn.schur_element(lam))
                                        for lam in shapes}})
        return 0
    raise SystemExit(f"error: unknown command {cmd!r}")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
