#!/usr/bin/env python3
"""Writes fonts/conveyer.pft from the grid drawings below.

Each drawing is a grid with 3 units between rows and columns. Letters mark
disks; the belt visits them in alphabetical order. Lowercase wraps the disk
counter-clockwise, uppercase clockwise.
"""
import sys

SPACING = 3

GLYPHS = {
    "A": [".h.", "a.g", "bDf", "c.e"],
    "B": ["ah.", "..g", "bF.", "..e", "cd."],
    "C": ["ahg", "bF.", "cde"],
    "D": ["ag.", "b.f", "..e", "cd."],
    "E": ["a.h", ".G.", "bf.", ".E.", "c.d"],
    "F": ["a.g", ".F.", "be.", ".D.", "c.."],
    "G": ["a.g", ".F.", "b.e", "c.d"],
    "H": ["a.e", ".F.", ".C.", "b.d"],
    "I": ["a", "b", "c", "d"],
    "J": ["..d", "...", "aEc", ".b."],
    "K": ["a.f", "bE.", "c.d"],
    "L": ["a..", "bE.", "c.d"],
    "M": [".a.g.", ".C.E.", "b.d.f"],
    "N": ["a...e", ".....", ".C.F.", ".....", "b...d"],
    "O": ["ahg", "b.f", "cde"],
    "P": ["af.", "..e", "bD.", "c.."],
    "Q": ["agf.", "b...", "cD..", "...e"],
    "R": ["ag.", "..f", "bE.", "c.d"],
    "S": ["a.h", ".G.", "b.f", ".C.", "d.e"],
    "T": ["aed", "...", ".B.", ".c."],
    "U": ["a.d", "...", ".E.", "b.c"],
    "V": ["a.c", ".D.", ".b."],
    "W": ["a.f.d", ".G.E.", ".b.c."],
    "X": ["a...g", "..H..", ".B.F.", "..D..", "c...e"],
    "Y": ["a.d", ".E.", ".B.", ".c."],
    "Z": ["a.f", ".B.", "...", ".E.", "c.d"],
    "0": [".f.", "a.e", "b.d", ".c."],
    "1": [".a", "b.", "..", ".c"],
    "2": ["a.h.", ".B..", "c.g.", ".F..", "d..e"],
    "3": ["a.g", ".B.", "c..", ".D.", "e.f"],
    "4": ["a.e", ".F.", "b..", ".Cd"],
    "5": ["a..h", ".G..", "b.f.", ".C..", "d.e."],
    "6": ["a.f", ".E.", "..d", "b.c"],
    "7": ["a.d", ".B.", "...", ".c."],
    "8": ["a..f", "....", ".BE.", "....", "c..d"],
    "9": ["c.b", "d..", ".E.", "f.a"],
}


def glyph_record(key, rows):
    disks = {}
    for i, row in enumerate(rows):
        y = (len(rows) - 1 - i) * SPACING
        for j, ch in enumerate(row):
            if ch != ".":
                if ch.lower() in disks:
                    raise SystemExit(f"{key}: label {ch} used twice")
                disks[ch.lower()] = (j * SPACING, y, ch.isupper())
    labels = sorted(disks)
    if labels != [chr(ord("a") + k) for k in range(len(labels))]:
        raise SystemExit(f"{key}: labels must run a, b, c, ... without gaps")
    lines = [f"glyph {key}"]
    for lab in labels:
        x, y, _ = disks[lab]
        lines.append(f"disk {x} {y}")
    belt = " ".join(f"{k}{'-' if disks[lab][2] else '+'}" for k, lab in enumerate(labels))
    lines.append(f"belt {belt}")
    return "\n".join(lines)


def main():
    out = ["# Generated by tools/fontgen/conveyer.py; edit the drawings there.", "font conveyer 1"]
    for key in sorted(GLYPHS):
        out.append("")
        out.append(glyph_record(key, GLYPHS[key]))
    text = "\n".join(out) + "\n"
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
