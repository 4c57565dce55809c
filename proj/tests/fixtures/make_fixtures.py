#!/usr/bin/env python3
"""Regenerates the PGM fixtures used by the test suites.

dark_n2.pgm is the golden output of `enhance dark.pgm --n 2`, computed here
with a per-pixel affine stretch (l - min) * 255 / (max - min), rounded half up.
"""
import math
import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))


def write_p5(name, width, height, levels, maxval=255):
    with open(os.path.join(HERE, name), "wb") as f:
        f.write(b"P5\n%d %d\n%d\n" % (width, height, maxval))
        f.write(bytes(levels))


def write_p2(name, width, height, levels, maxval=255):
    with open(os.path.join(HERE, name), "w") as f:
        f.write("P2\n# constant test image\n%d %d\n%d\n" % (width, height, maxval))
        for y in range(height):
            f.write(" ".join(str(v) for v in levels[y * width:(y + 1) * width]) + "\n")


def main():
    rng = random.Random(20021)
    w, h = 64, 48
    dark = [18 + int(110 * rng.random() ** 2.2) for _ in range(w * h)]
    write_p5("dark.pgm", w, h, dark)

    lo, hi = min(dark), max(dark)
    golden = [math.floor((v - lo) * 255 / (hi - lo) + 0.5) for v in dark]
    write_p5("dark_n2.pgm", w, h, golden)

    write_p2("const.pgm", 8, 8, [42] * 64)
    write_p5("ramp.pgm", 256, 4, [x for _ in range(4) for x in range(256)])


if __name__ == "__main__":
    main()
