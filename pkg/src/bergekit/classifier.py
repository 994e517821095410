"""Asymptotic class of Bh(m,F) for F with at most five non-zero rows.

The decision runs top down through growth exponents.  A class is accepted
on its lower-bound trigger (a doubled all-ones column, or a large clique /
chromatic number in G(F)); the matching upper bound is then certified by
exhibiting a host matrix (an H matrix, t·K_k, a reduced C_4 / K_{2,3}
block, ...) that contains F as a Berge hypergraph, with every multiplicity
t capped at the column count of F.  A missing certificate raises, since
it means the cascade disagrees with the case analysis it encodes.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import named
from .constructions import ConstructionRecipe, make_generalH, make_H
from .containment import berge_contains, config_contains, contains_t_fold
from .graphs import (
    chromatic_number,
    clique_number,
    graph_of,
    incidence_matrix,
    independence_number,
    is_bipartite_with_cycle,
    is_forest,
)
from .matrix import (
    BitMatrix,
    K,
    canonical_form,
    concat,
    identity,
    is_simple,
    ones,
    pad_rows,
    product,
    reduce_r,
    repeat,
    strip_zero_rows,
    zeros,
)
from .solver import DOWNSET_MAX_M, solve_bh

MAX_CLASSIFY_ROWS = 5
SCHEMA = "bergekit/1"

_DEGREE_NAMES = {
    Fraction(0): "constant",
    Fraction(1): "linear",
    Fraction(3, 2): "subquadratic",
    Fraction(2): "quadratic",
    Fraction(3): "cubic",
    Fraction(4): "quartic",
    Fraction(5): "quintic",
}


@dataclass(frozen=True)
class Rule:
    name: str
    anchor: str


@dataclass(frozen=True)
class Fact:
    anchor: str
    statement: str


# Results cited by the case analysis; recorded for provenance, never recomputed.
FACTS: tuple[Fact, ...] = (
    Fact("Ik", "Bh(m,I_k) = 2^(k-1) for m >= k-1"),
    Fact("G1", "Bh(m,G_1) = floor(3m/2) + 1"),
    Fact("clique", "Bh(m,F) is Omega(m^(chi(G(F))-1))"),
    Fact("construction", "if 2·1_t << F then Bh(m,F) is Omega(m^t)"),
    Fact("block1s", "forb(m,t·1_k) = forb(m,t·K_k) is Theta(m^k) for t >= 2"),
    Fact("boundary", "forb(m,[1_k | t·K_k^(k-1)]) is Theta(m^(k-1))"),
    Fact("smallboundary", "forb(m,F) is O(m^(k-2)) under the three pair conditions"),
    Fact("BB", "forb(m,{I_k, I_k^c, T_k}) is a constant c_k"),
    Fact("classify", "forb(m,family) is Omega(m) or constant"),
    Fact("constantlinear", "Bh(m,F) is Omega(m) or F << I_(k+l) and Bh(m,F) is O(1)"),
    Fact("1pxIk-p", "Bh(m,H(p,k,t)) is Theta(m^p)"),
    Fact("1xC4", "Bh(m,H((1,2,2),t)) is Theta(m^2) provided Bh(m,1_1 x C_4) is Theta(m^2)"),
    Fact("reduction", "Bh(m,[F | t·I_k]) <= Bh(m,F) + (tk+l)m"),
    Fact("rowcol0s", "zero rows do not change Bh for m > k; Bh(m,[0_k F]) = max(||F||, Bh(m,F))"),
    Fact("twoconfigs", "forb(m,{I_2 x I_2, T_2 x T_2}) is Theta(m^(3/2))"),
    Fact("KSTlower", "f(C_4, I_(m/2) x I_(m/2)) is Theta(m^(3/2))"),
    Fact("C4", "Bh(m,C_4) is Theta(m^(3/2))"),
    Fact("K2t", "Bh(m,I_2 x I_t) is Theta(ex(m,K_(2,t))) = Theta(m^(3/2))"),
    Fact("K3inKst", "ex(m,K_3,K_(s,t)) is Theta(m^(3-3/s)) for t >= (s-1)!+1"),
    Fact("I3Ik", "Bh(m,I_3 x I_t) is Theta(m^2)"),
    Fact("tree", "Bh(m,F) is Theta(m) for F the incidence matrix of a forest"),
    Fact("treeforb", "forb(m,F) for forest incidence F is Theta(m^(k-3)), Theta(m^(k-2)) or Theta(m^(k-1))"),
    Fact("2x2x2", "f(I_2 x I_2 x I_2, I_(m/3)^3) is O(m^(11/4)) and Omega(m^(5/2))"),
    Fact("conjC4", "conjectured: Bh(m,1_1 x C_4) is Theta(m^2)"),
)

FACT_TABLE = {f.anchor: f for f in FACTS}


@dataclass(frozen=True)
class AsymptoticClass:
    """Growth class of an extremal function.

    ``kind`` is ``"Theta"`` (``exponent`` set) or ``"BoundedBetween"``
    (``lo``/``hi`` set).  ``conditional`` marks results resting on the
    unproved 1_1 x C_4 conjecture.
    """

    kind: str
    exponent: Fraction | None = None
    lo: Fraction | None = None
    hi: Fraction | None = None
    conditional: bool = False
    rules: tuple[Rule, ...] = ()
    lower_witness: ConstructionRecipe | None = None
    upper_host: str | None = None
    notes: tuple[str, ...] = ()

    @property
    def degree_name(self) -> str:
        return _DEGREE_NAMES.get(self.exponent, f"m^{self.exponent}")

    def label(self) -> str:
        if self.kind == "Theta":
            return "Theta(1)" if self.exponent == 0 else f"Theta(m^{self.exponent})"
        return f"Omega(m^{self.lo})..O(m^{self.hi})"

    def as_dict(self) -> dict:
        d: dict = {"schema": SCHEMA}
        if self.kind == "Theta":
            d["theta"] = {"num": self.exponent.numerator, "den": self.exponent.denominator}
        else:
            d["bounded"] = {
                "lo": {"num": self.lo.numerator, "den": self.lo.denominator},
                "hi": {"num": self.hi.numerator, "den": self.hi.denominator},
            }
        d["conditional"] = self.conditional
        d["rules"] = [{"name": r.name, "anchor": r.anchor} for r in self.rules]
        d["witness"] = self.lower_witness.describe() if self.lower_witness else None
        d["upper"] = self.upper_host
        d["notes"] = list(self.notes)
        return d


def _theta(e) -> Fraction:
    return Fraction(e)


_EXTREMAL_CATALOG = {
    canonical_form(named("G1")): "g1",
    canonical_form(named("H2")): "h2",
    canonical_form(named("H8")): "h8",
}


def _low_block(k: int, t: int) -> BitMatrix:
    """t·[0_k | I_k]."""
    return repeat(concat(zeros(k), identity(k)), t)


def _certify(F: BitMatrix, host: BitMatrix, what: str) -> None:
    if berge_contains(F, host) is None:
        raise ValueError(f"upper-bound certificate failed: F is not a Berge hypergraph of {what}")


def classify_bh(F: BitMatrix) -> AsymptoticClass:
    """Asymptotic class of Bh(m,F) with rule provenance and a lower-bound recipe."""
    rules: list[Rule] = []
    notes: list[str] = []
    Fs = strip_zero_rows(F)
    k = Fs.rows
    if k > MAX_CLASSIFY_ROWS:
        raise ValueError(f"classification covers at most {MAX_CLASSIFY_ROWS} non-zero rows, got {k}")
    if F.rows > k:
        rules.append(Rule("strip-zero-rows", "rowcol0s"))
    if any(c == 0 for c in F.cols):
        notes.append("zero columns: Bh(m,[0_k F]) = max(||F||, Bh(m,F)), class unchanged")
    if k <= 2:
        notes.append("extrapolated: no k<=2 theorem; cascade cross-checked against exact values")
    t = max(1, F.ncols)

    def done(e, conditional=False, witness=None, host=None):
        return AsymptoticClass(
            "Theta", _theta(e), conditional=conditional, rules=tuple(rules),
            lower_witness=witness, upper_host=host, notes=tuple(notes),
        )

    if k == 0:
        # only zero columns: ||F|| - 1 columns are the most one can take
        rules.append(Rule("constant-zero-columns", "rowcol0s"))
        recipe = ConstructionRecipe("Catalog", ("zero",)) if F.ncols >= 2 else ConstructionRecipe("Catalog", ("empty",))
        return done(0, witness=recipe, host="t·0")

    anchor = {3: "classifyk=3", 4: "classifyk=4", 5: "classifyk=5"}.get(k, "constantlinear")
    G = graph_of(Fs)
    omega = clique_number(G)
    chi = chromatic_number(G)

    def witness_for(e: int) -> ConstructionRecipe:
        cat = _EXTREMAL_CATALOG.get(canonical_form(Fs)) if Fs.rows <= 4 else None
        if cat is not None:
            return ConstructionRecipe("Catalog", (cat,))
        return ConstructionRecipe("IdentityProduct", (e,))

    # top exponent: a doubled full column
    if contains_t_fold(ones(k), 2, Fs):
        rules.append(Rule(f"{_DEGREE_NAMES[_theta(k)]}-2x1_{k}", anchor))
        rules.append(Rule("lower-construction", "construction"))
        rules.append(Rule("upper-t·K_k", "block1s"))
        _certify(Fs, repeat(K(k), t), f"{t}·K_{k}")
        return done(k, witness=witness_for(k), host=f"{t}·K_{k}")

    for e in range(k - 1, 1, -1):
        name = _DEGREE_NAMES[_theta(e)]
        if contains_t_fold(ones(e), 2, Fs):
            rules.append(Rule(f"{name}-2x1_{e}", anchor))
            rules.append(Rule("lower-construction", "construction"))
        elif e >= 3 and omega >= e + 1:
            rules.append(Rule(f"{name}-omega{e + 1}", anchor))
            rules.append(Rule("lower-clique", "clique"))
        elif e == 2 and chi >= 3:
            rules.append(Rule(f"{name}-chi3", anchor))
            rules.append(Rule("lower-clique", "clique"))
        else:
            continue
        if k == 5 and e == 2 and independence_number(G) <= 2:
            rules.append(Rule("upper-H((1,2,2),t)", "1xC4"))
            rules.append(Rule("assumes-1_1xC4-quadratic", "conjC4"))
            _certify(Fs, make_generalH((1, 2, 2), t), f"H((1,2,2),{t})")
            return done(e, conditional=True, witness=witness_for(e), host=f"H((1,2,2),{t})")
        rules.append(Rule(f"upper-H({e},{k},t)", "1pxIk-p"))
        _certify(Fs, make_H(e, k, t), f"H({e},{k},{t})")
        return done(e, witness=witness_for(e), host=f"H({e},{k},{t})")

    r = reduce_r(Fs)
    if r.ncols and all(c.bit_count() == 2 for c in r.cols) and is_simple(r) and is_bipartite_with_cycle(graph_of(r)):
        recipe = ConstructionRecipe("Catalog", ("c4free",))
        rules.append(Rule("lower-relative-C4-free", "KSTlower"))
        if k == 4:
            rules.insert(len(rules) - 1, Rule("subquadratic-C4", anchor))
            rules.append(Rule("upper-C4", "C4"))
            host, what = named("C4"), "C_4"
        else:
            rules.insert(len(rules) - 1, Rule("subquadratic-bipartite-cycle", anchor))
            rules.append(Rule("upper-K2t", "K2t"))
            host, what = product(identity(2), identity(3)), "I_2 x I_3"
        rules.append(Rule("upper-low-columns", "reduction"))
        host = concat(pad_rows(host, k - host.rows), _low_block(k, t))
        _certify(Fs, host, f"[{what} | {t}·[0|I_{k}]]")
        return done(Fraction(3, 2), witness=recipe, host=f"[{what} | t·[0|I_{k}]]")

    if k >= 2 and (contains_t_fold(ones(1), 2, Fs) or berge_contains(ones(2), Fs) is not None):
        trig = "2x1_1" if contains_t_fold(ones(1), 2, Fs) else "1_2"
        rules.append(Rule(f"linear-{trig}", anchor))
        rules.append(Rule("lower-construction", "construction"))
        H1 = make_H(1, k, t)
        if berge_contains(Fs, H1) is not None:
            rules.append(Rule(f"upper-H(1,{k},t)", "1pxIk-p"))
            return done(1, witness=witness_for(1), host=f"H(1,{k},{t})")
        if not is_forest(G):
            raise ValueError("upper-bound certificate failed: G(F) is not a forest in the linear case")
        rules.append(Rule("upper-tree", "tree"))
        rules.append(Rule("upper-low-columns", "reduction"))
        _certify(Fs, concat(incidence_matrix(G), _low_block(k, t)), "[inc(G(F)) | t·[0|I_k]]")
        return done(1, witness=witness_for(1), host="[inc(G(F)) | t·[0|I_k]]")

    rules.append(Rule("constant-Ik", anchor))
    rules.append(Rule("upper-Ik", "Ik"))
    rules.append(Rule("upper-zero-columns", "rowcol0s"))
    _certify(Fs, concat(identity(k), zeros(k, t)), f"[I_{k} | {t}·0_{k}]")
    j = sum(1 for c in Fs.cols if c)
    return done(0, witness=ConstructionRecipe("KcliqueConstant", (j,)), host=f"[I_{k} | t·0_{k}]")


def classify_treeforb(F: BitMatrix) -> AsymptoticClass:
    """Growth of forb(m,F) for F the vertex-edge incidence matrix of a forest on k >= 5 vertices."""
    k = F.rows
    if k < 5:
        raise ValueError("forest classification needs k >= 5 vertices")
    if not is_simple(F) or any(c.bit_count() != 2 for c in F.cols):
        raise ValueError("F is not a graph incidence matrix")
    if not is_forest(graph_of(F)):
        raise ValueError("F is not the incidence matrix of a forest")
    if config_contains(F, pad_rows(named("H1"), k - 4)) is not None:
        e, rule = k - 3, Rule("forb-in-H1", "treeforb")
    elif k >= 6 and config_contains(named("H9"), F) is not None:
        e, rule = k - 1, Rule("forb-contains-H9", "treeforb")
    else:
        e, rule = k - 2, Rule("forb-middle", "treeforb")
    return AsymptoticClass("Theta", _theta(e), rules=(rule,), notes=("forb(m,F), configuration avoidance",))


# ---------------------------------------------------------------------------
# exhaustive corpus
# ---------------------------------------------------------------------------

def enumerate_simple(k: int, max_cols: int) -> list[BitMatrix]:
    """All simple k-rowed matrices with 1..max_cols columns, one per isomorphism class."""
    level = {BitMatrix(k, ())}
    out: list[BitMatrix] = []
    for _ in range(max_cols):
        nxt = set()
        for A in level:
            present = set(A.cols)
            for c in range(1 << k):
                if c not in present:
                    nxt.add(canonical_form(BitMatrix(k, A.cols + (c,))))
        level = nxt
        out.extend(sorted(level, key=lambda M: (M.ncols, M.cols)))
    return out


@dataclass
class CorpusEntry:
    matrix: BitMatrix
    cls: AsymptoticClass | None
    witness_ok: bool = True
    constant_ok: bool = True
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.cls is not None and self.witness_ok and self.constant_ok and self.error is None

    def as_dict(self) -> dict:
        return {
            "matrix": self.matrix.to_literal(),
            "rows": self.matrix.rows,
            "class": self.cls.as_dict() if self.cls else None,
            "witness_ok": self.witness_ok,
            "constant_ok": self.constant_ok,
            "error": self.error,
        }


@dataclass
class CorpusReport:
    k: int
    max_cols: int
    entries: list[CorpusEntry] = field(default_factory=list)

    @property
    def failures(self) -> list[CorpusEntry]:
        return [e for e in self.entries if not e.ok]

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for e in self.entries:
            key = e.cls.label() if e.cls else "unclassified"
            out[key] = out.get(key, 0) + 1
        return dict(sorted(out.items()))

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "k": self.k,
            "max_cols": self.max_cols,
            "total": len(self.entries),
            "failures": len(self.failures),
            "counts": self.counts(),
            "entries": [e.as_dict() for e in self.entries],
        }


def _check_entry(F: BitMatrix, ms: tuple[int, ...], constant_ms: tuple[int, ...]) -> CorpusEntry:
    try:
        cls = classify_bh(F)
    except ValueError as exc:
        return CorpusEntry(F, None, error=str(exc))
    entry = CorpusEntry(F, cls)
    for m in ms:
        if berge_contains(F, cls.lower_witness.expand(m)) is not None:
            entry.witness_ok = False
    if cls.exponent == 0 and constant_ms:
        values = {solve_bh(F, m).value for m in constant_ms}
        entry.constant_ok = len(values) == 1
    return entry


def corpus_matrices(k: int, max_cols: int) -> list[BitMatrix]:
    """The simple corpus plus doubled variants 2·F of the small members."""
    base = enumerate_simple(k, max_cols)
    doubled = [repeat(F, 2) for F in base if F.ncols <= max_cols // 2]
    return base + doubled


def classify_corpus(
    k: int,
    max_cols: int,
    ms: tuple[int, ...] = (8, 10, 12),
    check_constant: bool = True,
    workers: int | None = None,
) -> CorpusReport:
    """Classify every corpus matrix and cross-check witnesses and constant cases."""
    if k > MAX_CLASSIFY_ROWS or max_cols > 6:
        raise ValueError("corpus limited to k <= 5 and max_cols <= 6")
    mats = corpus_matrices(k, max_cols)
    constant_ms = tuple(range(k + 1, DOWNSET_MAX_M + 1)) if check_constant else ()
    if workers is None:
        workers = int(os.environ.get("BERGEKIT_THREADS", "1") or 1)
    report = CorpusReport(k, max_cols)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_check_entry, F, ms, constant_ms) for F in mats]
            report.entries = [f.result() for f in futures]
    else:
        report.entries = [_check_entry(F, ms, constant_ms) for F in mats]
    return report
