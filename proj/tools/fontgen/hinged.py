#!/usr/bin/env python3
"""Writes fonts/hinged.pft. Each glyph is a bitmap of 16 unit squares; every
square becomes its two NE half-square triangles, giving 32 cells of area 16."""
import sys

GLYPHS = {
    "A": ["####", "#..#", "####", "#..#", "#..#", "#..#"],
    "B": ["###.", "#..#", "####", "#..#", "#..#", "###."],
    "C": ["####", "#..#", "#...", "#...", "#...", "##.#", "####"],
    "D": ["###.", "#.##", "#..#", "#..#", "#.##", "###."],
    "E": ["####", "#...", "#...", "####", "#...", "#...", "####"],
    "F": ["####", "##..", "####", "##..", "##..", "##.."],
    "G": ["####", "#...", "#.##", "#..#", "#..#", "####"],
    "H": ["#..#", "#..#", "#..#", "####", "#..#", "#..#", "#..#"],
    "I": ["####", ".##.", ".##.", ".##.", ".##.", "####"],
    "J": ["####", "..##", "..##", "..##", "#.##", "###."],
    "K": ["#...", "#.##", "###.", "##..", "###.", "#.##", "#..."],
    "L": ["##..", "##..", "##..", "##..", "##..", "##..", "####"],
    "M": ["#...#", "##.##", "#####", "#.#.#", "#...#"],
    "N": ["#..#", "##.#", "####", "#.##", "#..#", "#..#"],
    "O": ["####", "#..#", "#..#", "#..#", "#..#", "####"],
    "P": ["####", "#..#", "####", "##..", "##..", "##.."],
    "Q": ["####", "#..#", "#..#", "#..#", "####", "..##"],
    "R": ["###.", "#..#", "####", "#.#.", "#.##", "#..#"],
    "S": ["####", "#...", "#...", "####", "...#", "...#", "####"],
    "T": ["####", "####", ".##.", ".##.", ".##.", ".##."],
    "U": ["#..#", "#..#", "#..#", "#..#", "#..#", "#..#", "####"],
    "V": ["#..#", "#..#", "#..#", "#..#", "#..#", "####", ".##."],
    "W": ["#...#", "#...#", "#.#.#", "#####", "##.##"],
    "X": ["#..#", "####", ".##.", ".##.", "####", "#..#"],
    "Y": ["#..#", "#..#", "####", ".##.", ".##.", ".##.", ".##."],
    "Z": ["####", "...#", "..##", ".##.", "##..", "#...", "####"],
    "0": ["####", "#..#", "#.##", "##.#", "####"],
    "1": [".##", "###", ".##", ".##", ".##", ".##", "###"],
    "2": ["####", "...#", "...#", "####", "#...", "#...", "####"],
    "3": ["####", "...#", "...#", "####", "...#", "...#", "####"],
    "4": ["#..#", "#..#", "#..#", "####", "####", "...#", "...#"],
    "5": ["####", "#...", "####", "...#", "...#", "...#", "####"],
    "6": ["###.", "#...", "####", "#..#", "#..#", "####"],
    "7": ["####", "####", "..##", "..##", "..##", "..##"],
    "8": ["####", "#..#", "####", "#..#", "####"],
    "9": ["####", "#..#", "####", "...#", "...#", "####"],
}


def cells(rows):
    out = []
    for i, row in enumerate(rows):
        y = len(rows) - 1 - i
        for x, ch in enumerate(row):
            if ch == "#":
                out.append((y, x))
    return sorted(out)


def main():
    lines = ["# Generated by tools/fontgen/hinged.py; edit the bitmaps there.", "font hinged 1"]
    for key in sorted(GLYPHS):
        squares = cells(GLYPHS[key])
        if len(squares) != 16:
            raise SystemExit(f"{key}: {len(squares)} squares, expected 16")
        lines += ["", f"glyph {key}"]
        for y, x in squares:
            lines.append(f"cell {x} {y} NE first")
            lines.append(f"cell {x} {y} NE second")
    text = "\n".join(lines) + "\n"
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
