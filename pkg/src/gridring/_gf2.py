"""Small GF(2) linear algebra on int bitmasks."""

from __future__ import annotations


def solve(rows, rhs):
    """Solve the affine system over GF(2); rows are bitmasks of unknowns.

    Returns one solution as a bitmask (free variables zero), or None when
    the system is inconsistent.
    """
    sys_rows = []  # (pivot_col, row, b) in reduced row echelon form
    for r, b in zip(rows, rhs):
        for pc, pr, pb in sys_rows:
            if (r >> pc) & 1:
                r ^= pr
                b ^= pb
        if r:
            pc = (r & -r).bit_length() - 1
            sys_rows = [
                (c2, r2 ^ r, b2 ^ b) if (r2 >> pc) & 1 else (c2, r2, b2)
                for (c2, r2, b2) in sys_rows
            ]
            sys_rows.append((pc, r, b))
        elif b:
            return None
    sol = 0
    for pc, _r, b in sys_rows:
        if b:
            sol |= 1 << pc
    return sol


def solve_unit(rows, t):
    """Solve M x = e_t for square M given as row bitmasks."""
    rhs = [1 if i == t else 0 for i in range(len(rows))]
    return solve(rows, rhs)
