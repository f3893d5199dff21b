#!/usr/bin/env python3
"""Writes fonts/maze.pft. Each glyph is a list of axis-parallel wall runs drawn
inside a grid of height 7; strokes stay one unit clear of the border so all
glyphs share the same edge creases and glue together."""
import sys

HEIGHT = 7


def rect(x1, y1, x2, y2):
    return [(x1, y1, x2, y1), (x2, y1, x2, y2), (x2, y2, x1, y2), (x1, y2, x1, y1)]


def path(*pts):
    return [(a[0], a[1], b[0], b[1]) for a, b in zip(pts, pts[1:])]


# width, wall runs
GLYPHS = {
    "A": (5, path((1, 1), (1, 6), (4, 6), (4, 1)) + [(1, 4, 4, 4)]),
    "B": (5, path((1, 1), (1, 6), (3, 6), (3, 4)) + path((1, 4), (4, 4), (4, 1), (1, 1))),
    "C": (5, path((4, 6), (1, 6), (1, 1), (4, 1))),
    "D": (5, path((1, 1), (1, 6), (3, 6), (3, 5), (4, 5), (4, 2), (3, 2), (3, 1), (1, 1))),
    "E": (5, path((4, 6), (1, 6), (1, 1), (4, 1)) + [(1, 4, 3, 4)]),
    "F": (5, path((4, 6), (1, 6), (1, 1)) + [(1, 4, 3, 4)]),
    "G": (5, path((4, 6), (1, 6), (1, 1), (4, 1), (4, 3), (3, 3))),
    "H": (5, [(1, 1, 1, 6), (4, 1, 4, 6), (1, 4, 4, 4)]),
    "I": (4, [(1, 6, 3, 6), (2, 6, 2, 1), (1, 1, 3, 1)]),
    "J": (5, path((1, 6), (4, 6)) + path((3, 6), (3, 1), (1, 1), (1, 2))),
    "K": (5, [(1, 1, 1, 6)] + path((1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (4, 6))
          + path((2, 3), (2, 2), (3, 2), (3, 1), (4, 1))),
    "L": (5, path((1, 6), (1, 1), (4, 1))),
    "M": (6, path((1, 1), (1, 6), (5, 6), (5, 1)) + [(3, 6, 3, 3)]),
    "N": (5, [(1, 1, 1, 6), (4, 1, 4, 6)] + path((1, 6), (2, 6), (2, 4), (3, 4), (3, 1), (4, 1))),
    "O": (5, rect(1, 1, 4, 6)),
    "P": (5, path((1, 1), (1, 6), (4, 6), (4, 4), (1, 4))),
    "Q": (5, rect(1, 2, 4, 6) + [(3, 1, 3, 3)]),
    "R": (5, path((1, 1), (1, 6), (4, 6), (4, 4), (1, 4)) + [(3, 4, 3, 1)]),
    "S": (5, path((4, 6), (1, 6), (1, 4), (4, 4), (4, 1), (1, 1))),
    "T": (4, [(1, 6, 3, 6), (2, 6, 2, 1)]),
    "U": (5, path((1, 6), (1, 1), (4, 1), (4, 6))),
    "V": (5, path((1, 6), (1, 2), (2, 2), (2, 1), (3, 1), (3, 2), (4, 2), (4, 6))),
    "W": (6, path((1, 6), (1, 1), (5, 1), (5, 6)) + [(3, 1, 3, 4)]),
    "X": (5, path((1, 6), (1, 5), (2, 5), (2, 2), (1, 2), (1, 1))
          + path((4, 6), (4, 5), (3, 5), (3, 2), (4, 2), (4, 1))),
    "Y": (4, path((1, 6), (1, 4), (3, 4), (3, 6)) + [(2, 4, 2, 1)]),
    "Z": (5, path((1, 6), (4, 6), (4, 5), (3, 5), (3, 4), (2, 4), (2, 3), (1, 3), (1, 1), (4, 1))),
}


def main():
    out = ["# Generated by tools/fontgen/maze.py; edit the strokes there.", "font maze 1"]
    for key in sorted(GLYPHS):
        width, walls = GLYPHS[key]
        out += ["", f"glyph {key}", f"grid {width} {HEIGHT}"]
        out += [f"wall {a} {b} {c} {d}" for a, b, c, d in walls]
    text = "\n".join(out) + "\n"
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
