"""Hand-built filtrations shared by the persistence and acceptance tests."""

from itertools import combinations

from gradedmod.persistence import FilteredComplex


def closure(top_simplices):
    """Add all faces; each face enters at the earliest time of a coface."""
    times = {}
    for verts, t in top_simplices:
        verts = tuple(sorted(verts))
        for size in range(1, len(verts) + 1):
            for face in combinations(verts, size):
                times[face] = min(times.get(face, t), t)
    return FilteredComplex(list(times.items()))


TRIANGLE = FilteredComplex([
    ((0,), 0), ((1,), 0), ((2,), 0),
    ((0, 1), 1), ((1, 2), 1), ((0, 2), 1),
    ((0, 1, 2), 2),
])

CORPUS = {
    "triangle": TRIANGLE,
    "empty": FilteredComplex([]),
    "vertex": FilteredComplex([((0,), 0)]),
    "late_edge": FilteredComplex([((0,), 0), ((1,), 2), ((0, 1), 4)]),
    "square_filled": FilteredComplex([
        ((0,), 0), ((1,), 0), ((2,), 0), ((3,), 1),
        ((0, 1), 1), ((1, 2), 1), ((2, 3), 2), ((0, 3), 2),
        ((0, 2), 3), ((0, 1, 2), 4), ((0, 2, 3), 5),
    ]),
    "hollow_tetrahedron_then_solid": closure([
        ((0, 1, 2), 1), ((0, 1, 3), 2), ((0, 2, 3), 2), ((1, 2, 3), 3), ((0, 1, 2, 3), 5),
    ]),
    "two_loops_staggered": FilteredComplex([
        ((0,), 0), ((1,), 0), ((2,), 0), ((3,), 0), ((4,), 0), ((5,), 1),
        ((0, 1), 1), ((1, 2), 1), ((0, 2), 1),
        ((3, 4), 2), ((4, 5), 2), ((3, 5), 3),
        ((0, 1, 2), 3), ((3, 4, 5), 6),
    ]),
    "figure_eight": FilteredComplex([
        ((0,), 0), ((1,), 0), ((2,), 0), ((3,), 0), ((4,), 0),
        ((0, 1), 0), ((1, 2), 1), ((0, 2), 1),
        ((0, 3), 2), ((3, 4), 2), ((0, 4), 3),
    ]),
    "path_staggered": FilteredComplex([
        ((0,), 0), ((1,), 1), ((2,), 2), ((3,), 3),
        ((0, 1), 4), ((1, 2), 4), ((2, 3), 5),
    ]),
    "star": FilteredComplex(
        [((0,), 0)] + [((i,), i - 1) for i in range(1, 6)] + [((0, i), 10 - i) for i in range(1, 6)]
    ),
    "octahedron": closure(
        [((a, b, c), t) for t, (a, b, c) in enumerate(
            (x, y, z) for x in (0, 1) for y in (2, 3) for z in (4, 5)
        )]
    ),
    "cone_on_square": closure([
        ((0, 1), 0), ((1, 2), 0), ((2, 3), 0), ((0, 3), 0),
        ((0, 1, 4), 1), ((1, 2, 4), 2), ((2, 3, 4), 3), ((0, 3, 4), 4),
    ]),
}
