"""Verification suites: machine-checkable reports over a fixed desk-scale
configuration matrix.

Every suite instantiates exact algebras, evaluates both sides of each claimed
identity, and records one entry per comparison; nothing is approximate, so a
"pass" is an equality of field elements and a "fail" ships both sides
verbatim.  The suites:

    hecke-core   monomial-basis closure, dimension count, defining relations
    trace        symmetry of the trace over all ordered basis pairs
    cellular     triangular Gram matrix of the two cellular families
    seminormal   orthogonality, gamma scalars, trace values, pair products
    dual         distinguished dual families and their pairing matrix
    schur        Schur-algebra dimensions, products, idempotents, Weyl forms
    cocenter     cocenter dimension, commutator basis, center bridge,
                 residue dichotomy
    all          everything above

Each report carries the full configuration echo and the convention flag for
the normalization of the dual pairing, so runs are self-describing.
"""

from __future__ import annotations

import random
import time
from typing import Optional

from .algkit import IncrementalSpan
from .cellular import CellularBasis
from .coeff import QQ, GenericParams, PrimeField
from .combinat import enumerate_multipartitions, residue_equivalent
from .hecke import HeckeAlgebra, HeckeElement
from .schur import SchurContext
from .seminormal import DUAL_FACTOR_CONVENTION, SeminormalBasis
from .traceform import (
    cellular_gram,
    class_dependence,
    gram_diagonal_unit,
    r_lambda,
    structure_algebra,
    tau,
)

__all__ = ["SUITES", "run_suites", "reports_pass", "suite_names",
           "make_algebra", "config_echo"]


def make_algebra(cfg: dict) -> HeckeAlgebra:
    field = cfg.get("field", "rat")
    if field == "rat":
        base = QQ
    elif field.startswith("gf:"):
        base = PrimeField(int(field[3:]))
    else:
        raise ValueError(f"unknown field {field!r} (use rat or gf:p)")
    params = GenericParams(cfg["n"], cfg["ell"], base(cfg["xi"]),
                           tuple(base(q) for q in cfg["Q"]), base=base,
                           generic=bool(cfg.get("generic", False)))
    return HeckeAlgebra(params)


def config_echo(cfg: dict) -> dict:
    out = {
        "n": cfg["n"],
        "ell": cfg["ell"],
        "xi": str(cfg["xi"]),
        "Q": [str(q) for q in cfg["Q"]],
        "field": cfg.get("field", "rat"),
        "generic": bool(cfg.get("generic", False)),
    }
    if "comps" in cfg:
        out["comps"] = cfg["comps"]
    return out


class Recorder:
    """Accumulates check entries; equality checks stringify both sides."""

    def __init__(self):
        self.checks = []

    def check(self, name: str, lhs, rhs) -> bool:
        ok = lhs == rhs
        self.checks.append({
            "name": name,
            "status": "pass" if ok else "fail",
            "lhs": str(lhs),
            "rhs": str(rhs),
        })
        return ok

    def hold(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append({
            "name": name,
            "status": "pass" if bool(ok) else "fail",
            "lhs": detail if detail else ("true" if ok else "false"),
            "rhs": "true",
        })
        return bool(ok)

    @property
    def ok(self) -> bool:
        return all(c["status"] == "pass" for c in self.checks)


# ---------------------------------------------------------------------------
# hecke-core
# ---------------------------------------------------------------------------

HECKE_CORE_CONFIGS = [
    {"n": 2, "ell": 1, "xi": 2, "Q": (3,)},
    {"n": 3, "ell": 1, "xi": 2, "Q": (3,)},
    {"n": 2, "ell": 2, "xi": 3, "Q": (1, 2)},
    {"n": 3, "ell": 2, "xi": 2, "Q": (0, 1)},
    {"n": 2, "ell": 3, "xi": 3, "Q": (0, 1, 2)},
]


def suite_hecke_core(cfg: dict, rec: Recorder) -> None:
    H = make_algebra(cfg)
    n, ell = H.n, H.ell
    expected = ell ** n
    for k in range(2, n + 1):
        expected *= k
    keys = list(H.basis_keys())
    rec.check("basis count == ell^n * n!", len(keys), expected)
    rec.check("declared dimension", H.dim, expected)

    index = set(keys)
    gens = [("T%d" % i, H.T(i)) for i in range(1, n)]
    gens += [("L%d" % k, H.L(k)) for k in range(1, n + 1)]
    closed = True
    for key in keys:
        b = H.monomial(*key)
        for _, g in gens:
            for k2 in (b * g).data:
                if k2 not in index:
                    closed = False
    rec.hold("normal forms closed under right multiplication by generators",
             closed, f"{len(keys) * len(gens)} products scanned")

    one, zero = H.one(), H.zero()
    for i in range(1, n):
        rec.check(f"(T{i}+1)(T{i}-xi) == 0",
                  (H.T(i) + one) * (H.T(i) - H.xi * one), zero)
    cyc = one
    for q in H.Q:
        cyc = cyc * (H.L(1) - q * one)
    rec.check("prod (L1 - Q_l) == 0", cyc, zero)
    for i in range(1, n - 1):
        rec.check(f"braid T{i} T{i + 1} T{i}",
                  H.T(i) * H.T(i + 1) * H.T(i),
                  H.T(i + 1) * H.T(i) * H.T(i + 1))
    for i in range(1, n):
        for t in range(1, n + 1):
            if t not in (i, i + 1):
                rec.check(f"T{i} L{t} == L{t} T{i}",
                          H.T(i) * H.L(t), H.L(t) * H.T(i))
    for i in range(1, n):
        rec.check(f"L{i + 1}(T{i}-xi+1) == T{i} L{i} + 1",
                  H.L(i + 1) * (H.T(i) - (H.xi - 1) * one),
                  H.T(i) * H.L(i) + one)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            rec.check(f"L{a} L{b} == L{b} L{a}",
                      H.L(a) * H.L(b), H.L(b) * H.L(a))


# ---------------------------------------------------------------------------
# trace
# ---------------------------------------------------------------------------

TRACE_CONFIGS = [
    {"n": 2, "ell": 2, "xi": 1, "Q": (0, 1)},
    {"n": 3, "ell": 2, "xi": 2, "Q": (0, 1)},
    {"n": 2, "ell": 3, "xi": 3, "Q": (0, 1, 2)},
]


def suite_trace(cfg: dict, rec: Recorder) -> None:
    H = make_algebra(cfg)
    basis = list(H.basis())
    keys = list(H.basis_keys())
    for (ka, a) in zip(keys, basis):
        for (kb, b) in zip(keys, basis):
            rec.check(f"tau sym @ {ka}|{kb}", tau(a * b), tau(b * a))


# ---------------------------------------------------------------------------
# cellular
# ---------------------------------------------------------------------------

CELLULAR_CONFIGS = [
    {"n": 3, "ell": 1, "xi": 2, "Q": (3,)},
    {"n": 2, "ell": 2, "xi": 3, "Q": (1, 2)},
    {"n": 3, "ell": 2, "xi": 2, "Q": (0, 1)},
]


def suite_cellular(cfg: dict, rec: Recorder) -> None:
    H = make_algebra(cfg)
    cell = CellularBasis(H)
    labels, G = cellular_gram(cell)
    above = [(i, j) for i in range(len(G)) for j in range(i + 1, len(G))
             if G[i][j]]
    rec.check("Gram upper triangle vanishes", above, [])
    det_ok = True
    for i, (lam, s, t) in enumerate(labels):
        want = gram_diagonal_unit(H, s, t) * r_lambda(H, lam)
        if not rec.check(f"Gram diagonal @ {lam!r}|{s!r}|{t!r}", G[i][i], want):
            det_ok = False
        if not G[i][i]:
            det_ok = False
    rec.hold("Gram determinant invertible", det_ok,
             "triangular with unit diagonal")


# ---------------------------------------------------------------------------
# seminormal
# ---------------------------------------------------------------------------

SEMINORMAL_CONFIGS = [
    {"n": 2, "ell": 2, "xi": 3, "Q": (1, 2), "generic": True},
    {"n": 3, "ell": 1, "xi": 2, "Q": (3,), "generic": True},
]


def suite_seminormal(cfg: dict, rec: Recorder) -> None:
    H = make_algebra(cfg)
    sn = SeminormalBasis(H)
    pairs = sn.pairs()
    tabs = []
    for (lam, s, t) in pairs:
        if s == t:
            tabs.append((lam, t))

    total = H.zero()
    for (_, t) in tabs:
        total = total + sn.F(t)
    rec.check("sum F_t == 1", total, H.one())

    for (_, t) in tabs:
        g, gc = sn.gamma(t), sn.gamma_check(t)
        rec.hold(f"gamma nonzero @ {t!r}", bool(g), str(g))
        rec.hold(f"gamma-check nonzero @ {t!r}", bool(gc), str(gc))

    for (lam1, s, t) in pairs:
        for (lam2, u, v) in pairs:
            prod = sn.f(s, t) * sn.f(u, v)
            want = sn.gamma(t) * sn.f(s, v) if (lam1 == lam2 and t == u) else H.zero()
            rec.check(f"f_st f_uv rule @ {s!r}|{t!r}|{u!r}|{v!r}", prod, want)
            prodg = sn.g(s, t) * sn.g(u, v)
            # the structure scalar of the g-family at inner index t is
            # gamma_check read at the conjugate tableau
            wantg = (sn.gamma_check(t.conjugate()) * sn.g(s, v)
                     if (lam1 == lam2 and t == u) else H.zero())
            rec.check(f"g_st g_uv rule @ {s!r}|{t!r}|{u!r}|{v!r}", prodg, wantg)

    for (lam, s, t) in pairs:
        rec.check(f"tau(f_st) @ {s!r}|{t!r}", tau(sn.f(s, t)),
                  sn.tau_f_expected(s, t))
        rec.check(f"tau(f_ts g_st) @ {s!r}|{t!r}", sn.sigma(s, t),
                  sn.sigma_predicted(s, t))


# ---------------------------------------------------------------------------
# dual
# ---------------------------------------------------------------------------

DUAL_CONFIGS = [
    {"n": 2, "ell": 2, "xi": 5, "Q": (1, 7), "generic": True,
     "note": "separated"},
    {"n": 2, "ell": 2, "xi": 1, "Q": (2, 2), "generic": True,
     "note": "colliding"},
]


def _identity_deviation(matrix, one, zero) -> list:
    out = []
    for i, row in enumerate(matrix):
        for j, v in enumerate(row):
            want = one if i == j else zero
            if v != want:
                out.append((i, j, str(v)))
    return out


def suite_dual(cfg: dict, rec: Recorder) -> None:
    H = make_algebra(cfg)
    sn = SeminormalBasis(H)
    for kind in ("B", "Bcheck"):
        fam = sn.distinguished_family(kind)
        depth = sn.correction_depth(kind)
        rec.hold(f"{kind} corrections in x^-1 K[x^-1]",
                 all(len(cs) <= depth and any(cs)
                     for (_, corr) in fam.values() for cs in corr.values()),
                 f"depth {depth}, {sum(len(c) for (_, c) in fam.values())} "
                 f"corrected pairs")
    _, P = sn.pairing_matrix()
    rec.check("generic pairing matrix == identity",
              _identity_deviation(P, H.field_one, H.field_zero), [])
    target = HeckeAlgebra(H.params.specialized_version())
    _, P0 = sn.pairing_matrix_specialized(target)
    rec.check("specialized (x->0) pairing matrix == identity",
              _identity_deviation(P0, target.field_one, target.field_zero), [])


# ---------------------------------------------------------------------------
# schur
# ---------------------------------------------------------------------------

SCHUR_CONFIGS = [
    {"n": 2, "ell": 1, "xi": 3, "Q": (0,), "generic": True, "comps": "full",
     "dim": 10},
    {"n": 2, "ell": 2, "xi": 2, "Q": (0, 1), "generic": True,
     "comps": "partitions", "dim": 55},
]


def suite_schur(cfg: dict, rec: Recorder) -> None:
    H = make_algebra(cfg)
    S = SchurContext(H, comps=cfg.get("comps", "full"))
    rec.check("dim = sum of squared semistandard counts",
              S.dimension,
              sum(sum(len(S.tabs[(lam, mu)]) for mu in S.comps) ** 2
                  for lam in S.shapes))
    if "dim" in cfg:
        rec.check("dimension cross-check", S.dimension, cfg["dim"])
    one = S.one()
    rec.check("identity is idempotent", one * one, one)
    e = S.phi1_omega()
    rec.check("omega projector is idempotent", e * e, e)

    rng = random.Random(20260823)
    bad = []
    for _ in range(100):
        a, b, c = (S.phi(*S.labels[rng.randrange(S.dimension)])
                   for _ in range(3))
        if (a * b) * c != a * (b * c):
            bad.append((a, b, c))
    rec.check("associativity on 100 random basis triples", bad, [])

    # the omega corner is the Hecke algebra acting by left multiplication
    for lam in S.shapes:
        for A in S.tabs[(lam, S.omega)]:
            for B in S.tabs[(lam, S.omega)]:
                rec.check(f"omega corner @ {lam!r}|{A!r}|{B!r}",
                          S.phi(lam, A, B), S.embed(S.m_ST(lam, A, B)))

    # Jucys-Murphy action: triangular with content diagonal
    jm_cache = {}
    for lam in S.shapes:
        T_lam = S.superstd[lam]
        for (mu, T) in S.col_index[lam]:
            p = S.phi(lam, T_lam, T)
            for i in range(1, H.n + 1):
                for k in range(1, H.ell + 1):
                    op = jm_cache.get((mu, i, k))
                    if op is None:
                        op = jm_cache[(mu, i, k)] = S.jm(mu, i, k)
                    out = p * op
                    diag = out.terms.get((lam, T_lam, T), H.field_zero)
                    rec.check(f"JM diagonal @ {T!r}|({i},{k})",
                              diag, S.cont(T, i, k))

    cols, G = S.weyl_gram(S.shapes[0])
    rec.check("Weyl form normalized at the superstandard tableau",
              G[0][0], H.field_one)
    sym = all(G[i][j] == G[j][i] for i in range(len(G)) for j in range(len(G)))
    rec.hold("Weyl form symmetric", sym, f"{len(G)}x{len(G)}")

    SN = S.seminormal()
    tabs = [T for (_, _, T) in SN.tab_list]
    els = {T: SN.F_T_element(T) for T in tabs}
    zero = S.from_vec([H.field_zero] * S.dimension)
    bad = 0
    for T1 in tabs:
        for T2 in tabs:
            want = els[T1] if T1 == T2 else zero
            if els[T1] * els[T2] != want:
                bad += 1
    rec.check(f"F_T orthogonal idempotents ({len(tabs) ** 2} products)", bad, 0)
    total = zero
    for T in tabs:
        total = total + els[T]
    rec.check("sum F_T == identity", total, one)
    for lam in S.shapes:
        rec.check(f"gamma superstandard == 1 @ {lam!r}",
                  SN.gamma(S.superstd[lam]), H.field_one)

    fst = {}
    for lam in S.shapes:
        for (_, A) in S.col_index[lam]:
            for (_, B) in S.col_index[lam]:
                fst[(lam, A, B)] = SN.F_ST_element(lam, A, B)
    bad = 0
    cnt = 0
    for lam in S.shapes:
        col = S.col_index[lam]
        for (_, A) in col:
            for (_, B) in col:
                for (_, C) in col:
                    cnt += 1
                    if (fst[(lam, A, B)] * fst[(lam, B, C)]
                            != SN.gamma(B) * fst[(lam, A, C)]):
                        bad += 1
    rec.check(f"F_ST F_TU = gamma F_SU ({cnt} triples)", bad, 0)

    for h in [H.one(), H.T(1), H.L(H.n)]:
        rec.check(f"extended trace restricts to tau @ {h!r}",
                  SN.extended_trace(S.embed(h)), tau(h))
    for lam in S.shapes:
        for (_, T) in S.col_index[lam]:
            val = SN.extended_trace(els[T] * els[T])
            rec.hold(f"extended-trace diagonal invertible @ {T!r}", bool(val),
                     str(val))


# ---------------------------------------------------------------------------
# cocenter
# ---------------------------------------------------------------------------

COCENTER_CONFIGS = [
    {"n": 2, "ell": 1, "xi": 5, "Q": (1,), "comps": "full",
     "note": "semisimple rational point"},
    {"n": 2, "ell": 1, "xi": -1, "Q": (1,), "comps": "full",
     "note": "xi = -1"},
    {"n": 2, "ell": 1, "xi": 1, "Q": (1,), "field": "gf:2", "comps": "full",
     "note": "xi = 1 over GF(2)"},
    {"n": 2, "ell": 2, "xi": 5, "Q": (1, 7), "comps": "partitions",
     "note": "semisimple rational point"},
    {"n": 2, "ell": 2, "xi": -1, "Q": (0, 1), "comps": "partitions",
     "note": "xi = -1"},
    {"n": 2, "ell": 2, "xi": 1, "Q": (0, 1), "field": "gf:2",
     "comps": "partitions", "note": "xi = 1 over GF(2)"},
]

BRIDGE_CONFIGS = [
    {"n": 2, "ell": 1, "xi": 3, "Q": (0,), "generic": True, "comps": "full"},
    {"n": 2, "ell": 2, "xi": 2, "Q": (0, 1), "generic": True,
     "comps": "partitions"},
    {"n": 2, "ell": 2, "xi": 5, "Q": (1, 7), "comps": "partitions"},
    {"n": 2, "ell": 2, "xi": -1, "Q": (0, 1), "comps": "partitions"},
]

DICHOTOMY_CONFIGS = [
    {"n": 2, "ell": 1, "xi": -1, "Q": (0,)},
    {"n": 1, "ell": 2, "xi": 1, "Q": (2, 2)},
    {"n": 2, "ell": 2, "xi": 5, "Q": (1, 7), "note": "generic: all independent"},
]


def suite_cocenter(cfg: dict, rec: Recorder) -> None:
    mode = cfg.get("mode", "dimension")
    H = make_algebra(cfg)
    if mode == "dimension":
        S = SchurContext(H, comps=cfg.get("comps", "full"))
        rec.check("cocenter dimension == number of multipartition shapes",
                  S.cocenter_dim(), len(S.shapes))
        fam = S.commutator_family()
        rec.check("commutator family size == dim S - #shapes",
                  len(fam), S.dimension - len(S.shapes))
        span = IncrementalSpan()
        for (_, dec) in fam:
            span.insert(S.coords_vec(dec.witness))
        rec.check("commutator family spans [S,S] exactly",
                  span.dim, S.commutator_span().dim)
    elif mode == "bridge":
        S = SchurContext(H, comps=cfg.get("comps", "full"))
        algH = structure_algebra(H)
        zH = algH.center_basis()
        keys = list(H.basis_keys())
        span = IncrementalSpan()
        lifted_ok = True
        for v in zH:
            z = HeckeElement(H, {k: c for k, c in zip(keys, v) if c})
            try:
                span.insert(S.coords_vec(S.theta_lift(z)))
            except (ValueError, AssertionError):
                lifted_ok = False
        rec.hold("theta images certified central", lifted_ok,
                 f"{len(zH)} basis elements lifted")
        rec.check("theta images independent", span.dim, len(zH))
        algS = S.structure_algebra()
        rec.check("dim Z(H) == dim Z(S)", len(zH), len(algS.center_basis()))
    elif mode == "dichotomy":
        shapes = enumerate_multipartitions(H.n, H.ell)
        alg = structure_algebra(H)
        for lam in shapes:
            for mu in shapes:
                dep = class_dependence(H, lam, mu, alg)
                res = residue_equivalent(lam, mu, H.xi, H.Q)
                rec.check(f"dependence == residue equivalence @ {lam!r}|{mu!r}",
                          dep, res)
    else:
        raise ValueError(f"unknown cocenter mode {mode!r}")


def _cocenter_matrix() -> list:
    out = []
    for c in COCENTER_CONFIGS:
        out.append(dict(c, mode="dimension"))
    for c in BRIDGE_CONFIGS:
        out.append(dict(c, mode="bridge"))
    for c in DICHOTOMY_CONFIGS:
        out.append(dict(c, mode="dichotomy"))
    return out


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------

SUITES = {
    "hecke-core": (suite_hecke_core, lambda: list(HECKE_CORE_CONFIGS)),
    "trace": (suite_trace, lambda: list(TRACE_CONFIGS)),
    "cellular": (suite_cellular, lambda: list(CELLULAR_CONFIGS)),
    "seminormal": (suite_seminormal, lambda: list(SEMINORMAL_CONFIGS)),
    "dual": (suite_dual, lambda: list(DUAL_CONFIGS)),
    "schur": (suite_schur, lambda: list(SCHUR_CONFIGS)),
    "cocenter": (suite_cocenter, _cocenter_matrix),
}


def suite_names() -> list:
    return list(SUITES) + ["all"]


def run_suites(names, config: Optional[dict] = None) -> list:
    """Reports for the named suites; `config` overrides the default matrix
    (where it makes sense) with a single user-supplied configuration."""
    if isinstance(names, str):
        names = [names]
    expanded = []
    for name in names:
        if name == "all":
            expanded.extend(SUITES)
        elif name in SUITES:
            expanded.append(name)
        else:
            raise ValueError(f"unknown suite {name!r}; "
                             f"choose from {', '.join(suite_names())}")
    reports = []
    for name in expanded:
        fn, default = SUITES[name]
        if config is not None:
            configs = [dict(config)]
            if name == "cocenter":
                configs[0].setdefault("mode", "dimension")
        else:
            configs = default()
        for cfg in configs:
            rec = Recorder()
            t0 = time.time()
            fn(cfg, rec)
            echo = config_echo(cfg)
            if "note" in cfg:
                echo["note"] = cfg["note"]
            if "mode" in cfg:
                echo["mode"] = cfg["mode"]
            reports.append({
                "suite": name,
                "config": echo,
                "checks": rec.checks,
                "timing": {"seconds": round(time.time() - t0, 3)},
                "dual_factor_convention": DUAL_FACTOR_CONVENTION,
            })
    return reports


def reports_pass(reports) -> bool:
    return all(c["status"] == "pass"
               for r in reports for c in r["checks"])
