#!/usr/bin/env python3
"""Print the 3x3 table of H_{m,n} and the alpha_{j,nu} triangle (nu <= 5) as LaTeX."""
from hermite2.cli import render_alpha, render_table

print(render_table(3, 3, "latex"))
print()
print(render_alpha(5, "latex"))
