#!/usr/bin/env python3
"""Writes fonts/cane.pft. Letters are 5x7 dot matrices placed inside the unit
cane envelope; each dot becomes a sub-cane given in polar form. O and I use the
classic ring and line designs."""
import math
import sys

PITCH = 0.2
RADIUS = 0.085
TWIST = (0.5, 4)

GLYPHS = {
    "A": [".###.", "#...#", "#...#", "#####", "#...#", "#...#", "#...#"],
    "B": ["####.", "#...#", "#...#", "####.", "#...#", "#...#", "####."],
    "C": [".###.", "#...#", "#....", "#....", "#....", "#...#", ".###."],
    "D": ["####.", "#...#", "#...#", "#...#", "#...#", "#...#", "####."],
    "E": ["#####", "#....", "#....", "####.", "#....", "#....", "#####"],
    "F": ["#####", "#....", "#....", "####.", "#....", "#....", "#...."],
    "G": [".###.", "#...#", "#....", "#.###", "#...#", "#...#", ".###."],
    "H": ["#...#", "#...#", "#...#", "#####", "#...#", "#...#", "#...#"],
    "J": ["..###", "...#.", "...#.", "...#.", "...#.", "#..#.", ".##.."],
    "K": ["#...#", "#..#.", "#.#..", "##...", "#.#..", "#..#.", "#...#"],
    "L": ["#....", "#....", "#....", "#....", "#....", "#....", "#####"],
    "M": ["#...#", "##.##", "#.#.#", "#.#.#", "#...#", "#...#", "#...#"],
    "N": ["#...#", "#...#", "##..#", "#.#.#", "#..##", "#...#", "#...#"],
    "P": ["####.", "#...#", "#...#", "####.", "#....", "#....", "#...."],
    "Q": [".###.", "#...#", "#...#", "#...#", "#.#.#", "#..#.", ".##.#"],
    "R": ["####.", "#...#", "#...#", "####.", "#.#..", "#..#.", "#...#"],
    "S": [".####", "#....", "#....", ".###.", "....#", "....#", "####."],
    "T": ["#####", "..#..", "..#..", "..#..", "..#..", "..#..", "..#.."],
    "U": ["#...#", "#...#", "#...#", "#...#", "#...#", "#...#", ".###."],
    "V": ["#...#", "#...#", "#...#", "#...#", "#...#", ".#.#.", "..#.."],
    "W": ["#...#", "#...#", "#...#", "#.#.#", "#.#.#", "#.#.#", ".#.#."],
    "X": ["#...#", "#...#", ".#.#.", "..#..", ".#.#.", "#...#", "#...#"],
    "Y": ["#...#", "#...#", ".#.#.", "..#..", "..#..", "..#..", "..#.."],
    "Z": ["#####", "....#", "...#.", "..#..", ".#...", "#....", "#####"],
}


def polar(x, y, r=RADIUS):
    rho = math.hypot(x, y)
    phi = math.degrees(math.atan2(y, x)) % 360.0 if rho > 0 else 0.0
    return (round(rho, 9), round(phi, 6), r)


def dots(rows):
    out = []
    for i, row in enumerate(rows):
        for j, ch in enumerate(row):
            if ch == "#":
                out.append(polar((j - 2) * PITCH, (3 - i) * PITCH))
    return out


def sections():
    table = {key: dots(rows) for key, rows in GLYPHS.items()}
    table["O"] = [polar(0.6 * math.cos(math.radians(a)), 0.6 * math.sin(math.radians(a)), 0.12)
                  for a in range(0, 360, 36)]
    table["I"] = [polar(0.0, (3 - i) * PITCH) for i in range(7)]
    return table


def fmt(v):
    return repr(float(v)).removesuffix(".0") if float(v).is_integer() else repr(float(v))


def main():
    lines = ["# Generated by tools/fontgen/cane.py; edit the dot matrices there.", "font cane 1"]
    for key, subs in sorted(sections().items()):
        lines += ["", f"glyph {key}"]
        lines += [f"subcane {fmt(rho)} {fmt(phi)} {fmt(r)} white" for rho, phi, r in subs]
        lines.append(f"twist {fmt(TWIST[0])} {fmt(TWIST[1])}")
    text = "\n".join(lines) + "\n"
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
