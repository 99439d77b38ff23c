"""Exact combinatorial deciders for edge-rigidity, cross-checked in one report.

A connected graph is edge-rigid exactly when the adjoint of every Laplacian
power is a constant vector over edges. Several equivalent tests exist:
pairwise Laplacian-cospectrality of edges, walk-regularity of any signed
line graph, 1-walk-(bi)regularity of the graph itself, and the floating
point edge-isometry check of the spectral embeddings. ``full_report`` runs
them all and insists they agree; a disagreement is an implementation bug,
never a mathematical outcome.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistencyError
from .exactmat import adjugate_quadratic_form, exact_matrix, identity_exact
from .graphs import (
    DegreeClassification,
    Edge,
    Graph,
    Orientation,
    adjoint_apply,
    bipartition,
    degree_classification,
    laplacian,
    signed_line_graph,
)
from .spectral import edge_isometry_check, spectrum

WALK_LABELS = (
    "1-walk-regular",
    "walk-regular-only",
    "1-walk-biregular",
    "walk-biregular-only",
    "neither",
)


@dataclass(frozen=True)
class WalkWitness:
    """Smallest power l where adjoint(L^l) is not constant, with two edges."""

    power: int
    edge_a: Edge
    edge_b: Edge
    value_a: int
    value_b: int

    def to_dict(self) -> dict:
        return {
            "power": self.power,
            "edge_a": list(self.edge_a),
            "edge_b": list(self.edge_b),
            "value_a": self.value_a,
            "value_b": self.value_b,
        }


@dataclass(frozen=True)
class WalkCriterion:
    rigid: bool
    constants: tuple[int, ...] | None
    witness: WalkWitness | None


def decide_edge_rigid_exact(g: Graph, max_power: int | None = None) -> WalkCriterion:
    """Exact integer decider: adjoint(L^l) constant for l = 0..max_power.

    max_power defaults to n - 1, which is sufficient because the minimal
    polynomial of L has degree at most n. Returns the walk constants C_l on
    success, or the first offending power with a witness edge pair.
    """
    lmax = g.n - 1 if max_power is None else max_power
    L = exact_matrix(laplacian(g))
    P = identity_exact(g.n)
    constants = []
    for power in range(lmax + 1):
        if power > 0:
            P = P @ L
        vals = adjoint_apply(g, P)
        lo = min(range(g.m), key=lambda e: vals[e])
        hi = max(range(g.m), key=lambda e: vals[e])
        if vals[lo] != vals[hi]:
            witness = WalkWitness(
                power, g.edges[lo], g.edges[hi], int(vals[lo]), int(vals[hi])
            )
            return WalkCriterion(False, None, witness)
        constants.append(int(vals[0]))
    return WalkCriterion(True, tuple(constants), None)


def cospectrality_classes(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Partition edge indices by the characteristic polynomial of L - L_e.

    One class means all edges are pairwise Laplacian-cospectral, which is
    equivalent to edge-rigidity.
    """
    buckets: dict[tuple[int, ...], list[int]] = {}
    for e in range(g.m):
        key = adjugate_quadratic_form(g, e).coeffs
        buckets.setdefault(key, []).append(e)
    classes = sorted(buckets.values(), key=lambda c: c[0])
    return tuple(tuple(c) for c in classes)


@dataclass(frozen=True)
class WalkClassification:
    label: str
    walk_regular: bool
    one_walk_regular: bool
    bipartite: bool
    walk_biregular: bool | None  # None when the graph is not bipartite
    one_walk_biregular: bool | None

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "walk_regular": self.walk_regular,
            "one_walk_regular": self.one_walk_regular,
            "bipartite": self.bipartite,
            "walk_biregular": self.walk_biregular,
            "one_walk_biregular": self.one_walk_biregular,
        }


def walk_class(g: Graph, max_power: int | None = None) -> WalkClassification:
    """Exact walk-regularity classification from adjacency powers A^l.

    Checks l = 0..n-1: walk-regular means diag(A^l) is globally constant;
    1-walk-regular additionally has (A^l)_ab constant over edges.
    Walk-biregular graphs have diag(A^l) constant on each side of the
    bipartition; the biregular tests are skipped for non-bipartite input.
    """
    lmax = g.n - 1 if max_power is None else max_power
    parts = bipartition(g)
    A = exact_matrix(g.adjacency)
    P = identity_exact(g.n)
    diag_const = True
    edge_const = True
    part_const = parts is not None
    for power in range(lmax + 1):
        if power > 0:
            P = P @ A
        diag = [P[v, v] for v in range(g.n)]
        if len(set(diag)) > 1:
            diag_const = False
        if len({P[a, b] for a, b in g.edges}) > 1:
            edge_const = False
        if parts is not None and part_const:
            for side in parts:
                if len({diag[v] for v in side}) > 1:
                    part_const = False
        if not diag_const and not part_const and not edge_const:
            break

    if diag_const:
        label = "1-walk-regular" if edge_const else "walk-regular-only"
    elif parts is not None and part_const:
        label = "1-walk-biregular" if edge_const else "walk-biregular-only"
    else:
        label = "neither"
    return WalkClassification(
        label=label,
        walk_regular=diag_const,
        one_walk_regular=diag_const and edge_const,
        bipartite=parts is not None,
        walk_biregular=part_const if parts is not None else None,
        one_walk_biregular=(part_const and edge_const) if parts is not None else None,
    )


def signed_line_graph_walk_regular(
    g: Graph, o: Orientation | None = None, max_power: int | None = None
) -> bool:
    """True iff diag((2I + A_sigma)^p) is constant for p = 1..m.

    The edge count m bounds the degree of the minimal polynomial of B^T B,
    and the verdict is orientation-independent (switching invariance).
    """
    pmax = g.m if max_power is None else max_power
    M = exact_matrix(signed_line_graph(g, o) + 2 * identity_exact(g.m))
    P = M
    for _ in range(pmax):
        if len({P[e, e] for e in range(g.m)}) > 1:
            return False
        P = P @ M
    return True


@dataclass(frozen=True)
class RigidityReport:
    """Verdicts from every decider, plus the structural classifications."""

    edge_rigid: bool
    verdicts: dict[str, bool | None]  # None means skipped
    walk_constants: tuple[int, ...] | None
    witness: WalkWitness | None
    cospectrality_classes: tuple[tuple[int, ...], ...] | None
    degree_class: DegreeClassification
    walk_class: WalkClassification | None
    gammas: tuple[float, ...] | None
    float_tol: float

    def to_dict(self) -> dict:
        return {
            "edge_rigid": self.edge_rigid,
            "verdicts": dict(self.verdicts),
            "walk_constants": list(self.walk_constants) if self.walk_constants else None,
            "witness": self.witness.to_dict() if self.witness else None,
            "cospectrality_classes": (
                [list(c) for c in self.cospectrality_classes]
                if self.cospectrality_classes is not None
                else None
            ),
            "degree_class": self.degree_class.to_dict(),
            "walk_class": self.walk_class.to_dict() if self.walk_class else None,
            "gammas": list(self.gammas) if self.gammas is not None else None,
            "float_tol": self.float_tol,
        }


def full_report(g: Graph, tol: float = 1e-8, skip: tuple[str, ...] = ()) -> RigidityReport:
    """Run every decider and assemble the cross-checked report.

    skip may name any of "cospectrality", "signed_line_graph", "walk_class",
    "float_embedding" to leave that verdict out (reported as None); the
    exact walk criterion always runs. All computed verdicts must agree or
    InternalInconsistencyError is raised.
    """
    unknown = set(skip) - {"cospectrality", "signed_line_graph", "walk_class", "float_embedding"}
    if unknown:
        raise ValueError(f"unknown skip names: {sorted(unknown)}")

    wc = decide_edge_rigid_exact(g)
    verdicts: dict[str, bool | None] = {"walk_criterion": wc.rigid}

    classes = None
    if "cospectrality" not in skip:
        classes = cospectrality_classes(g)
        verdicts["cospectrality"] = len(classes) == 1
    else:
        verdicts["cospectrality"] = None

    if "signed_line_graph" not in skip:
        verdicts["signed_line_graph"] = signed_line_graph_walk_regular(g)
    else:
        verdicts["signed_line_graph"] = None

    wclass = None
    if "walk_class" not in skip:
        wclass = walk_class(g)
        verdicts["walk_regularity_class"] = wclass.label in (
            "1-walk-regular",
            "1-walk-biregular",
        )
    else:
        verdicts["walk_regularity_class"] = None

    gammas = None
    if "float_embedding" not in skip:
        s = spectrum(laplacian(g).astype(float))
        iso = edge_isometry_check(g, s, tol)
        verdicts["float_embedding"] = iso.all_constant
        gammas = iso.gammas
    else:
        verdicts["float_embedding"] = None

    decided = {k: v for k, v in verdicts.items() if v is not None}
    if len(set(decided.values())) > 1:
        raise InternalInconsistencyError(
            f"equivalent deciders disagree on edge-rigidity: {decided}"
        )

    return RigidityReport(
        edge_rigid=wc.rigid,
        verdicts=verdicts,
        walk_constants=wc.constants,
        witness=wc.witness,
        cospectrality_classes=classes,
        degree_class=degree_classification(g),
        walk_class=wclass,
        gammas=gammas,
        float_tol=tol,
    )
