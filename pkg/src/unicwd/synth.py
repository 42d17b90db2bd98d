"""Constructive synthesis of bounded-width expressions for unigraphs.

Each catalog family has an explicit construction: cographs (matchings, U2
shapes and their complements) need two labels; C5 and the hub family U3
need three; the split families are built star by star, keeping the clique
part labeled 1 and the independent part labeled 2 throughout, within
3/3/4/4 labels for S2, the same for S3, and 4/4/5/5 for S4 across the four
variants. Composition is imitated by a fixed gluing pattern that borrows
labels 3 and 4, so the whole pipeline never exceeds five labels.

Synthesis reuses the input graph's vertex names (via the matched
correspondences), so the final verification is exact edge-set equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import (
    C5Spec,
    ComponentMatch,
    K1Spec,
    MK2Spec,
    S2Spec,
    S3Spec,
    S4Spec,
    U2Spec,
    U3Spec,
    apply_variant,
    build_template,
    _recognize,
)
from .decomp import compose_splitted
from .graph import (
    Graph,
    SplittedGraph,
    complement,
    connected_components,
    find_induced_p4,
    induced,
    rename,
    rename_splitted,
)
from .kexpr import (
    Intro,
    Join,
    KExpr,
    Relabel,
    Union,
    evaluate,
    is_split_labeled,
    vertex_names,
    width,
)

__all__ = [
    "NotCographError",
    "NotUnigraphError",
    "SPLIT_WIDTH_BOUNDS",
    "NONSPLIT_WIDTH_BOUNDS",
    "SplitExpr",
    "SynthesisReport",
    "ComponentReport",
    "glue_split",
    "glue_tail",
    "synth_cograph",
    "synth_nonsplit",
    "synth_split",
    "synthesize",
]


class NotCographError(ValueError):
    def __init__(self, witness: tuple[str, str, str, str] | None) -> None:
        detail = f" (induced path {'-'.join(witness)})" if witness else ""
        super().__init__(f"graph contains an induced P4, not a cograph{detail}")
        self.witness = witness


class NotUnigraphError(ValueError):
    def __init__(self, reason: str) -> None:
        super().__init__(f"not a unigraph: {reason}")
        self.reason = reason


@dataclass(frozen=True)
class SplitExpr:
    """An expression whose evaluation is split labeled for ``target``."""

    expr: KExpr
    target: SplittedGraph


@dataclass(frozen=True)
class ComponentReport:
    family: str
    variant: str
    width: int
    tail: bool = False


@dataclass(frozen=True)
class SynthesisReport:
    total_width: int
    components: tuple[ComponentReport, ...]

    @property
    def per_component_widths(self) -> tuple[int, ...]:
        return tuple(c.width for c in self.components)

    @property
    def component_families(self) -> tuple[str, ...]:
        return tuple(c.family for c in self.components)


# width ceilings per family and variant
SPLIT_WIDTH_BOUNDS = {
    "K1": {"identity": 1, "inverse": 1, "complement": 1, "inverse_complement": 1},
    "S2": {"identity": 3, "inverse": 3, "complement": 4, "inverse_complement": 4},
    "S3": {"identity": 3, "inverse": 3, "complement": 4, "inverse_complement": 4},
    "S4": {"identity": 4, "inverse": 4, "complement": 5, "inverse_complement": 5},
}
NONSPLIT_WIDTH_BOUNDS = {
    "C5": 3,
    "MK2": 2,
    "U2": 2,
    "U3": 3,
    "K1": 1,
}


# ---------------------------------------------------------------------------
# cographs (two labels, all labels 1 afterwards)


def synth_cograph(g: Graph) -> KExpr:
    """A width-<=2 expression for a P4-free graph, all labels 1 at the end."""
    if g.n == 0:
        raise ValueError("cannot synthesize an expression for the empty graph")

    def rec(h: Graph) -> KExpr:
        if h.n == 1:
            return Intro(h.vertices[0], 1)
        comps = connected_components(h)
        if len(comps) > 1:
            return Union(tuple(rec(induced(h, c)) for c in sorted(comps, key=sorted)))
        cocomps = connected_components(complement(h))
        if len(cocomps) == 1:
            raise NotCographError(find_induced_p4(h) if h.n <= 60 else None)
        parts = [rec(induced(h, c)) for c in sorted(cocomps, key=sorted)]
        acc = parts[0]
        for part in parts[1:]:
            acc = Relabel(2, 1, Join(1, 2, Union(acc, Relabel(1, 2, part))))
        return acc

    return rec(g)


def _clique_expr(names: list[str]) -> KExpr:
    """All-1 width-<=2 expression of a complete graph on ``names``."""
    acc: KExpr = Intro(names[0], 1)
    for v in names[1:]:
        acc = Relabel(2, 1, Join(1, 2, Union(acc, Intro(v, 2))))
    return acc


# ---------------------------------------------------------------------------
# split families


def _star_split_expr(center: str, leaves: list[str], variant: str) -> KExpr:
    """Split-labeled expression for one star under a variant.

    identity: the star itself (center is the clique part). inverse: the
    complete graph on leaves+center, with the leaves forming the clique
    part. complement: the isolated center next to a clique of leaves.
    inverse of complement: no edges at all, center on the clique side.
    """
    if variant == "identity":
        return Join(1, 2, Union(Intro(center, 1), *(Intro(l, 2) for l in leaves)))
    if variant == "inverse":
        return Join(1, 2, Union(Intro(center, 2), _clique_expr(leaves)))
    if variant == "complement":
        return Union(Intro(center, 2), _clique_expr(leaves))
    return Union(Intro(center, 1), *(Intro(l, 2) for l in leaves))


def _stars_variant_triple(stars: list[tuple[str, list[str]]], variant: str) -> SplittedGraph:
    """The splitted graph an S2-style star list denotes under a variant."""
    centers = [c for c, _ in stars]
    leaves = [l for _, ls in stars for l in ls]
    edges = [(c, l) for c, ls in stars for l in ls]
    for i in range(len(centers)):
        for j in range(i + 1, len(centers)):
            edges.append((centers[i], centers[j]))
    base = SplittedGraph(Graph(centers + leaves, edges), frozenset(centers), frozenset(leaves))
    return apply_variant(base, variant)


def _s2_expr(stars: list[tuple[str, list[str]]], variant: str, check_steps: bool) -> KExpr:
    """Star-by-star induction over a non-increasing star list."""
    stars = sorted(stars, key=lambda s: (-len(s[1]), s[0]))
    acc = _star_split_expr(stars[0][0], stars[0][1], variant)
    for idx, (center, leaves) in enumerate(stars[1:], start=2):
        piece = _star_split_expr(center, leaves, variant)
        if variant in ("identity", "inverse"):
            acc = Relabel(3, 1, Join(1, 3, Union(acc, Relabel(1, 3, piece))))
        else:
            acc = Relabel(
                4,
                2,
                Relabel(
                    3,
                    1,
                    Join(
                        2,
                        3,
                        Join(1, 4, Join(1, 3, Union(acc, Relabel(2, 4, Relabel(1, 3, piece))))),
                    ),
                ),
            )
        if check_steps:
            target = _stars_variant_triple(stars[:idx], variant)
            if not is_split_labeled(acc, target):
                raise AssertionError("split labeling broken during star induction")
    return acc


def _s3_expr(
    small: list[tuple[str, list[str]]],
    big: list[tuple[str, list[str]]],
    v: str,
    variant: str,
    check_steps: bool,
) -> KExpr:
    """Wrap the two star groups and attach v per the family construction.

    ``small`` holds the q1 stars of size p (the ones v is attached to in
    the identity orientation), ``big`` the q2 stars of size p+1.
    """
    left = _s2_expr(small, variant, check_steps)
    right = _s2_expr(big, variant, check_steps)
    if variant == "identity":
        inner = Relabel(3, 2, Join(1, 3, Union(left, Intro(v, 3))))
        return Relabel(3, 1, Join(1, 3, Union(inner, Relabel(1, 3, right))))
    if variant == "inverse":
        inner = Relabel(3, 1, Join(2, 3, Join(1, 3, Union(left, Intro(v, 3)))))
        return Relabel(3, 1, Join(1, 3, Union(inner, Relabel(1, 3, right))))
    if variant == "complement":
        inner = Relabel(3, 1, Join(1, 3, Union(left, Intro(v, 3))))
        return Relabel(
            4,
            2,
            Relabel(
                3,
                1,
                Join(2, 3, Join(1, 4, Join(1, 3, Union(inner, Relabel(2, 4, Relabel(1, 3, right)))))),
            ),
        )
    inner = Union(left, Intro(v, 2))
    return Relabel(
        4,
        2,
        Relabel(
            3,
            1,
            Join(2, 3, Join(1, 4, Join(1, 3, Union(inner, Relabel(2, 4, Relabel(1, 3, right)))))),
        ),
    )


def _s4_expr(
    small: list[tuple[str, list[str]]],
    big: list[tuple[str, list[str]]],
    v: str,
    u: str,
    variant: str,
    check_steps: bool,
) -> KExpr:
    """S3 inner block with v kept on label 3, then the u stage on label 4.

    For the complement variants the inner block borrows label 5 for the
    second star group, which is where the family's width of five comes
    from.
    """
    left = _s2_expr(small, variant, check_steps)
    right = _s2_expr(big, variant, check_steps)
    if variant == "identity":
        x = Relabel(
            4,
            1,
            Join(1, 4, Union(Join(1, 3, Union(left, Intro(v, 3))), Relabel(1, 4, right))),
        )
        return Relabel(4, 1, Relabel(3, 2, Join(2, 4, Join(1, 4, Union(Intro(u, 4), x)))))
    if variant == "inverse":
        x = Relabel(
            4,
            1,
            Join(
                3,
                4,
                Join(
                    1,
                    4,
                    Union(Join(2, 3, Join(1, 3, Union(left, Intro(v, 3)))), Relabel(1, 4, right)),
                ),
            ),
        )
        # u is adjacent to exactly the leaves here, so only the 1-4 join
        # applies (joining u to v as well would add a foreign edge)
        return Relabel(4, 2, Relabel(3, 1, Join(1, 4, Union(Intro(u, 4), x))))
    if variant == "complement":
        x = Relabel(
            5,
            2,
            Relabel(
                4,
                1,
                Join(
                    3,
                    5,
                    Join(
                        3,
                        4,
                        Join(
                            2,
                            4,
                            Join(
                                1,
                                5,
                                Join(
                                    1,
                                    4,
                                    Union(
                                        Join(1, 3, Union(left, Intro(v, 3))),
                                        Relabel(2, 5, Relabel(1, 4, right)),
                                    ),
                                ),
                            ),
                        ),
                    ),
                ),
            ),
        )
        return Relabel(4, 2, Relabel(3, 1, Join(3, 4, Union(Intro(u, 4), x))))
    x = Relabel(
        5,
        2,
        Relabel(
            4,
            1,
            Join(
                3,
                4,
                Join(
                    2,
                    4,
                    Join(
                        1,
                        5,
                        Join(
                            1,
                            4,
                            Union(Union(left, Intro(v, 3)), Relabel(2, 5, Relabel(1, 4, right))),
                        ),
                    ),
                ),
            ),
        ),
    )
    return Relabel(4, 1, Relabel(3, 2, Join(3, 4, Join(1, 4, Union(Intro(u, 4), x)))))


def _stars_from_correspondence(
    spec_sizes: list[int], corr, offset: int = 0
) -> list[tuple[str, list[str]]]:
    stars = []
    for i, p in enumerate(spec_sizes, start=offset + 1):
        stars.append((corr[f"c{i}"], [corr[f"c{i}l{j}"] for j in range(1, p + 1)]))
    return stars


def synth_split(match: ComponentMatch, check_steps: bool = False) -> SplitExpr:
    """Split-labeled expression for a matched split component."""
    spec, variant, corr = match.spec, match.variant, match.correspondence
    template = build_template(spec)
    target = rename_splitted(apply_variant(template, variant), corr)

    if isinstance(spec, K1Spec):
        name = corr["a"]
        label = 1 if name in target.clique_part else 2
        expr: KExpr = Intro(name, label)
    elif isinstance(spec, S2Spec):
        stars = _stars_from_correspondence(spec.star_sizes(), corr)
        expr = _s2_expr(stars, variant, check_steps)
    elif isinstance(spec, S3Spec):
        big = _stars_from_correspondence([spec.p + 1] * spec.q2, corr)
        small = _stars_from_correspondence([spec.p] * spec.q1, corr, offset=spec.q2)
        expr = _s3_expr(small, big, corr["v"], variant, check_steps)
    elif isinstance(spec, S4Spec):
        big = _stars_from_correspondence([spec.p + 1] * spec.q, corr)
        small = _stars_from_correspondence([spec.p] * 2, corr, offset=spec.q)
        expr = _s4_expr(small, big, corr["v"], corr["u"], variant, check_steps)
    else:
        raise ValueError(f"{spec.family} is not a split catalog family")

    if not is_split_labeled(expr, target):
        raise AssertionError(f"synthesized {spec.family}/{variant} expression is not split labeled")
    if width(expr) > SPLIT_WIDTH_BOUNDS[spec.family][variant]:
        raise AssertionError(f"{spec.family}/{variant} expression exceeds its width bound")
    return SplitExpr(expr, target)


# ---------------------------------------------------------------------------
# nonsplit families


def _k2_expr(a: str, b: str) -> KExpr:
    return Relabel(2, 1, Join(1, 2, Union(Intro(a, 1), Intro(b, 2))))


def _c5_expr(order: list[str]) -> KExpr:
    x1, x2, x3, x4, x5 = order
    p1 = Join(1, 2, Union(Intro(x1, 2), Intro(x2, 1)))
    p2 = Join(2, 3, Union(Intro(x3, 3), Intro(x4, 2)))
    path = Relabel(3, 1, Join(1, 3, Union(p1, p2)))
    return Relabel(3, 1, Relabel(2, 1, Join(2, 3, Union(path, Intro(x5, 3)))))


def _cycle_order(g: Graph) -> list[str]:
    start = g.vertices[0]
    order = [start, min(g.neighbors(start))]
    while len(order) < g.n:
        nxt = [w for w in g.neighbors(order[-1]) if w != order[-2]]
        order.append(nxt[0])
    return order


def _u3_expr(corr, m: int) -> KExpr:
    pair_exprs = [_k2_expr(corr[f"a{i}"], corr[f"b{i}"]) for i in range(1, m + 1)]
    mk2: KExpr = pair_exprs[0] if m == 1 else Union(tuple(pair_exprs))
    star = Join(
        1, 2, Union(Intro(corr["w2"], 1), Intro(corr["w1"], 2), Intro(corr["w3"], 2))
    )
    return Relabel(
        3, 1, Relabel(2, 1, Join(2, 3, Union(Relabel(1, 2, mk2), Intro(corr["h"], 3), star)))
    )


def _u3_complement_expr(g: Graph, corr, m: int) -> KExpr:
    pair_names = [corr[f"{x}{i}"] for i in range(1, m + 1) for x in "ab"]
    compl_mk2 = synth_cograph(induced(g, pair_names))
    k2k1 = Union(
        Relabel(2, 1, Join(1, 2, Union(Intro(corr["w1"], 1), Intro(corr["w3"], 2)))),
        Intro(corr["w2"], 2),
    )
    inner = Relabel(1, 2, Join(2, 3, Union(Intro(corr["h"], 3), k2k1)))
    return Relabel(3, 1, Relabel(2, 1, Join(1, 2, Union(compl_mk2, inner))))


def synth_nonsplit(match: ComponentMatch) -> KExpr:
    """Expression for a matched nonsplit core, all labels 1 at the end."""
    spec, variant, corr = match.spec, match.variant, match.correspondence
    if isinstance(spec, K1Spec):
        target = Graph([corr["a"]])
        expr: KExpr = Intro(corr["a"], 1)
    else:
        template = build_template(spec)
        target = rename(apply_variant(template, variant), corr)
        if isinstance(spec, C5Spec):
            expr = _c5_expr(_cycle_order(target))
        elif isinstance(spec, (MK2Spec, U2Spec)):
            expr = synth_cograph(target)  # these shapes and their complements are P4-free
        elif isinstance(spec, U3Spec):
            if variant == "identity":
                expr = _u3_expr(corr, spec.m)
            else:
                expr = _u3_complement_expr(target, corr, spec.m)
        else:
            raise ValueError(f"{spec.family} is not a nonsplit catalog family")

    result = evaluate(expr)
    if result.graph != target or any(lab != 1 for lab in result.labels.values()):
        raise AssertionError(f"synthesized {spec.family}/{variant} core expression is wrong")
    bound = NONSPLIT_WIDTH_BOUNDS[spec.family]
    if width(expr) > bound:
        raise AssertionError(f"{spec.family} core expression exceeds width {bound}")
    return expr


# ---------------------------------------------------------------------------
# gluing


def glue_split(outer: SplitExpr, inner: SplitExpr, check: bool = False) -> SplitExpr:
    """Compose two split-labeled expressions into one.

    The inner component's labels move to 3/4, the outer clique (label 1)
    is joined to all of the inner piece, and the labels fold back to the
    split labeling of the composed graph. Width <= max(4, both widths).
    """
    clash = outer.target.graph.vertex_set & inner.target.graph.vertex_set
    if clash:
        raise ValueError(f"vertex name collision: {sorted(clash)[0]!r}")
    expr = Relabel(
        4,
        2,
        Relabel(
            3,
            1,
            Join(1, 4, Join(1, 3, Union(outer.expr, Relabel(2, 4, Relabel(1, 3, inner.expr))))),
        ),
    )
    target = compose_splitted(outer.target, inner.target)
    if check and not is_split_labeled(expr, target):
        raise AssertionError("gluing broke the split labeling")
    return SplitExpr(expr, target)


def glue_tail(s: SplitExpr, tail: KExpr) -> KExpr:
    """Compose a split-labeled expression over an all-1 core expression."""
    clash = s.target.graph.vertex_set & set(vertex_names(tail))
    if clash:
        raise ValueError(f"vertex name collision: {sorted(clash)[0]!r}")
    return Relabel(3, 1, Relabel(2, 1, Join(1, 3, Union(s.expr, Relabel(1, 3, tail)))))


# ---------------------------------------------------------------------------
# the pipeline


def synthesize(g: Graph, check_steps: bool = False) -> tuple[KExpr, SynthesisReport]:
    """Build a width-<=5 expression that evaluates exactly to ``g``.

    Recognizes the graph, synthesizes every component, glues innermost
    outward and verifies the result by exact edge-set equality before
    returning. Raises NotUnigraphError when recognition fails.
    """
    decomposition, matches, tail_match, failure = _recognize(g)
    if failure is not None:
        raise NotUnigraphError(failure)
    assert matches is not None

    reports: list[ComponentReport] = []
    acc: SplitExpr | None = None
    for m in matches:
        piece = synth_split(m, check_steps)
        reports.append(ComponentReport(m.spec.family, m.variant, width(piece.expr)))
        acc = piece if acc is None else glue_split(acc, piece, check=check_steps)

    if tail_match is not None:
        tail_expr = synth_nonsplit(tail_match)
        reports.append(
            ComponentReport(tail_match.spec.family, tail_match.variant, width(tail_expr), tail=True)
        )
        expr = tail_expr if acc is None else glue_tail(acc, tail_expr)
    else:
        assert acc is not None
        expr = Relabel(2, 1, acc.expr)

    result = evaluate(expr)
    if result.graph != g:
        raise AssertionError("synthesized expression does not evaluate to the input graph")
    if any(lab != 1 for lab in result.labels.values()):
        raise AssertionError("synthesized expression leaves labels other than 1")
    total = width(expr)
    if total > 5:
        raise AssertionError(f"synthesized width {total} exceeds the bound 5")
    return expr, SynthesisReport(total_width=total, components=tuple(reports))
