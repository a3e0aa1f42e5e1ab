"""Re-check the postconditions claimed by a witness file.

Every check re-derives the claim with the set algebra and the point action;
nothing is trusted from the file beyond the objects themselves.  The result
is a list of (ok, description) pairs, one per postcondition.
"""

from .element import (
    TableElement,
    closed_support,
    compose,
    equals,
    image_clopen,
    invert,
    is_identity,
    order,
)
from .errors import ParseError
from .space import Clopen, point_in
from .textio import Witness, parse_point
from .vembed import VEmbedding, evaluate_embedding
from .witness import avoiding_neighborhood, vigor_case

Check = tuple[bool, str]


def _need(w: Witness, name: str):
    if name not in w.blocks:
        raise ParseError("witness %r is missing block %r" % (w.kind, name))
    return w.blocks[name]


def _check_compress(w: Witness) -> list[Check]:
    a, b, out = _need(w, "A"), _need(w, "B"), _need(w, "output")
    return [
        (out.source == a, "source equals A"),
        (out.image.issubset(b), "image inside B"),
        (out.image != b, "image strictly smaller than B"),
    ]


def _check_double(w: Witness) -> list[Check]:
    x = _need(w, "X")
    b1, b2 = _need(w, "output1"), _need(w, "output2")
    union = b1.image.union(b2.image)
    return [
        (b1.source == x, "first source equals X"),
        (b2.source == x, "second source equals X"),
        (b1.image.isdisjoint(b2.image), "images disjoint"),
        (union.issubset(x), "images inside X"),
        (union != x, "images leave room in X"),
    ]


def _check_between(w: Witness) -> list[Check]:
    a, b, out = _need(w, "A"), _need(w, "B"), _need(w, "output")
    return [
        (out.source == a, "source equals A"),
        (out.image == b, "image equals B"),
    ]


def _check_multisection(w: Witness) -> list[Check]:
    x0, x1, x2 = _need(w, "X0"), _need(w, "X1"), _need(w, "X2")
    g = _need(w, "element")
    checks = [
        (order(g, 4) == 3, "element has order 3"),
        (closed_support(g) == x0.union(x1).union(x2), "support is the union of the cycle sets"),
        (image_clopen(g, x0) == x1, "maps X0 onto X1"),
        (image_clopen(g, x1) == x2, "maps X1 onto X2"),
        (image_clopen(g, x2) == x0, "maps X2 onto X0"),
    ]
    return checks


def _check_vigor(w: Witness) -> list[Check]:
    x, y1, y2 = _need(w, "X"), _need(w, "Y1"), _need(w, "Y2")
    g = _need(w, "element")
    checks = [
        (closed_support(g).issubset(x), "support inside X"),
        (image_clopen(g, y1).issubset(y2), "image of Y1 inside Y2"),
    ]
    if vigor_case(x, y1, y2) == "b":
        checks.append((order(g, 4) == 3, "single-cycle case has order 3"))
    return checks


def _check_conjugates(w: Witness) -> list[Check]:
    g = _need(w, "element")
    moved = _need(w, "moved")
    count = int(w.params.get("count", "0"))
    if count < 1:
        raise ParseError("conjugates witness needs a positive 'count' parameter")
    conjugates = [_need(w, "conjugate%d" % i) for i in range(1, count + 1)]
    conjugators = [_need(w, "conjugator%d" % i) for i in range(1, count + 1)]
    targets = [_need(w, "target%d" % i) for i in range(1, count + 1)]
    checks = []
    for i in range(count):
        h = conjugators[i]
        checks.append(
            (
                equals(conjugates[i], compose(compose(h, g), invert(h))),
                "conjugate %d equals h g h^-1" % (i + 1),
            )
        )
        checks.append(
            (
                image_clopen(conjugates[i], moved).issubset(targets[i]),
                "conjugate %d maps the moved brick into its target" % (i + 1),
            )
        )
    distinct = all(
        not equals(conjugates[i], conjugates[j])
        for i in range(count)
        for j in range(i + 1, count)
    )
    checks.append((distinct, "conjugates pairwise distinct"))
    disjoint = all(
        targets[i].isdisjoint(targets[j])
        for i in range(count)
        for j in range(i + 1, count)
    )
    checks.append((disjoint, "targets pairwise disjoint"))
    return checks


def _fixes_neighborhood(point, g: TableElement) -> bool:
    support = closed_support(g)
    if point_in(point, support):
        return False
    avoiding_neighborhood(point, support)
    return True


def _check_compressibility(w: Witness) -> list[Check]:
    condition = int(w.params.get("condition", "0"))
    point_text = w.params.get("point")
    if point_text is None:
        raise ParseError("compressibility witness needs a 'point' parameter")
    if condition == 1:
        g = _need(w, "element")
        u = _need(w, "output")
        point = parse_point(point_text, u.space)
        return [
            (closed_support(g).issubset(u), "support inside the subbase member"),
            (not point_in(point, u), "subbase member avoids the point"),
        ]
    if condition == 2:
        u1, u2 = _need(w, "U1"), _need(w, "U2")
        g = _need(w, "element")
        point = parse_point(point_text, u1.space)
        return [
            (image_clopen(g, u1).issubset(u2), "image of U1 inside U2"),
            (not point_in(point, u1) and not point_in(point, u2), "U1, U2 avoid the point"),
            (_fixes_neighborhood(point, g), "element fixes a neighborhood of the point"),
        ]
    if condition == 3:
        u1, u2, u3 = _need(w, "U1"), _need(w, "U2"), _need(w, "U3")
        g = _need(w, "element")
        point = parse_point(point_text, u1.space)
        return [
            (image_clopen(g, u1).isdisjoint(u3), "image of U1 misses U3"),
            (closed_support(g).isdisjoint(u2), "support misses U2"),
            (u1.isdisjoint(u2), "U1 and U2 disjoint"),
            (_fixes_neighborhood(point, g), "element fixes a neighborhood of the point"),
        ]
    raise ParseError("compressibility condition must be 1, 2 or 3")


def _check_embed(w: Witness) -> list[Check]:
    x, y = _need(w, "X"), _need(w, "Y")
    s0, s1 = _need(w, "s0"), _need(w, "s1")
    checks = [
        (x.issubset(y), "region contains the prescribed support"),
        (y.h0_class() == 0, "region has class zero"),
        (s0.source == y and s1.source == y, "halving maps start from the region"),
        (s0.image.isdisjoint(s1.image), "halves disjoint"),
        (s0.image.union(s1.image) == y, "halves partition the region"),
    ]
    if "velement" in w.blocks:
        emb = VEmbedding(y.space, y, s0, s1)
        img = _need(w, "image")
        got = evaluate_embedding(emb, w.blocks["velement"])
        checks.append((equals(img, got), "image matches the evaluated element"))
        checks.append((closed_support(img).issubset(y), "image supported in the region"))
    return checks


_CHECKERS = {
    "compress": _check_compress,
    "double": _check_double,
    "between": _check_between,
    "multisection": _check_multisection,
    "vigor": _check_vigor,
    "conjugates": _check_conjugates,
    "compressibility": _check_compressibility,
    "embed": _check_embed,
}


def run_checks(w: Witness) -> list[Check]:
    checker = _CHECKERS.get(w.kind)
    if checker is None:
        raise ParseError("unknown witness kind %r" % w.kind)
    return checker(w)
