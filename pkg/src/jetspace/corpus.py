"""Built-in worked examples, each a complete input file for the runner.

Names are stable; reports for these entries are byte-deterministic, so
they double as regression fixtures and as documentation of the input
format.
"""

CORPUS = {
    "line": """\
# smooth affine line inside the plane
ring x, y
ideal X = y
point 0, 0
command check-main
""",
    "node": """\
# two transverse lines; the jet defect vanishes at every level
ring x, y
ideal X = x*y
point 0, 0
command lambda m_max=2 e_max=2
""",
    "cusp": """\
# cuspidal cubic; defect 1 at every level, so mld-hat is n + 1 = 2
ring x, y
ideal X = x^2 - y^3
point 0, 0
command lambda m_max=3 e_max=3
""",
    "tacnode": """\
# two smooth branches meeting tangentially: the two routes diverge on
# curves, and the jet route's verdict is the one reported
ring x, y
ideal X = x^2 - y^4
point 0, 0
command check-main
""",
    "cone": """\
# three-dimensional quadric cone in four-space
ring x, y, z, w
ideal X = x*y - z*w
point 0, 0, 0, 0
command lambda m_max=2 e_max=2
""",
    "umbrella": """\
# pinch point with a non-isolated singular locus
ring x, y, z
ideal X = x^2 - y^2*z
point 0, 0, 0
command check-main
""",
    "sphere": """\
# cone with no rational point besides the origin; the algebra still
# sees a two-dimensional variety with a reduced tangent cone
ring x, y, z
ideal X = x^2 + y^2 + z^2
point 0, 0, 0
command check-main
""",
    "tripleline": """\
# a doubled line union a transverse line, as a non-radical ideal
ring x, y
ideal X = x^3 + x^2*y - x*y^2 - y^3
point 0, 0
command check-main
""",
    "ex313-plane": """\
# smooth coordinate plane inside four-space: defect zero, mld-hat 2
ring x, y, z, w
ideal X = x, z
point 0, 0, 0, 0
command lambda m_max=2 e_max=2
""",
    "ex313": """\
# product of the plane's ideal with a quadric: order 3 along the
# exceptional divisor of the origin blowup, log discrepancy 1
ring x, y, z, w
ideal A = x*(x*y - z*w), z*(x*y - z*w)
command ord-blowup
""",
    "ex313-mld": """\
# discrepancy table for the weighted product ideal along the origin
ring x, y, z, w
ideal A = x*(x*y - z*w), z*(x*y - z*w)
ideal W = x, y, z, w
command mld-bound clauses=A^1 center=W M=3
""",
    "lct-point": """\
# threshold of the plane's origin ideal: exactly 2
ring x, y
ideal A = x, y
command lct-bound M=3
""",
    "lct-square": """\
# threshold of a doubled line: exactly 1/2
ring x, y
ideal A = x^2
command lct-bound M=2
""",
    "lct-mixed": """\
# threshold of (x^2, y^3): the minimum 5/6 appears at the window edge
ring x, y
ideal A = x^2, y^3
command lct-bound M=6
""",
    "cusp-jets": """\
# second jet scheme equations of the cuspidal cubic
ring x, y
ideal X = x^2 - y^3
command jets m=2
""",
    "cone-dim": """\
# dimension of the quadric cone, with an independent-variable witness
ring x, y, z, w
ideal X = x*y - z*w
command dim
""",
    "cusp-tangent-cone": """\
# initial forms of the cuspidal cubic at the origin
ring x, y
ideal X = x^2 - y^3
command tangent-cone
""",
    "cusp-lct": """\
# threshold bound for the origin ideal measured on the cusp itself
ring x, y
ideal X = x^2 - y^3
ideal A = x, y
command lct-bound ideal=A on=X M=2
""",
}
