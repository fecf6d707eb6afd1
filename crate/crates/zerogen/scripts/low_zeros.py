"""Certified low zeta-zero ordinates via arb (python-flint).

usage: low_zeros.py COUNT OUT
"""
import sys

import flint


def main():
    count = int(sys.argv[1])
    out = sys.argv[2]
    flint.ctx.prec = 80
    zs = flint.acb.zeta_zeros(1, count)
    with open(out, "w") as f:
        for z in zs:
            mid = z.imag.mid()
            f.write(mid.str(20, radius=False) + "\n")


if __name__ == "__main__":
    main()
