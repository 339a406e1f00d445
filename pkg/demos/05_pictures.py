"""Rendering paths: ASCII to the terminal, SVG to files.

Writes two SVG documents next to this script and prints an annotated
ASCII picture with levels and the bounce staircase.
Run:  python demos/05_pictures.py
"""

import pathlib

import rational_dyck as rd
from rational_dyck.render import RenderSpec, render_ascii, render_svg

HERE = pathlib.Path(__file__).resolve().parent

P = rd.make_path(5, 8, "NNNENEEENEEEE")
Q = rd.zeta(P)

print(render_ascii(P, RenderSpec(overlays=("levels",))))
print(render_ascii(Q, RenderSpec(overlays=("bounce",))))

for name, path, overlays in [
    ("path_with_hooks.svg", P, ("hooks",)),
    ("image_with_bounce.svg", Q, ("bounce", "levels")),
]:
    doc = render_svg(path, RenderSpec(format="svg", overlays=overlays))
    (HERE / name).write_text(doc, encoding="utf-8")
    print("wrote", HERE / name)
