"""Random small presentations for property tests."""

from hypothesis import assume
from hypothesis import strategies as st

from stringzeta.presentation import (
    Arrow, Presentation, Quiver, validate_string_algebra, validate_zero_relation,
)

NAMES = "abcd"


@st.composite
def presentations(draw, string_algebra=False):
    nv = draw(st.integers(1, 2))
    verts = [str(i) for i in range(nv)]
    na = draw(st.integers(1, 3))
    arrows = tuple(Arrow(NAMES[i], draw(st.sampled_from(verts)), draw(st.sampled_from(verts)))
                   for i in range(na))
    q = Quiver(tuple(verts), arrows)
    paths = [(x.name, y.name) for x in arrows for y in arrows if x.target == y.source]
    paths += [(x, y, z.name) for x, y in paths for z in arrows
              if q.arrow(y).target == z.source]
    rels = draw(st.lists(st.sampled_from(paths), max_size=6, unique=True)) if paths else []
    p = Presentation(q, tuple(rels))
    assume(validate_zero_relation(p).admissible)
    if string_algebra:
        assume(validate_string_algebra(p).string_algebra)
    return p
