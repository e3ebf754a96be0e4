"""
Lattice paths and the tree of balanced words
============================================

Draws a 2D and a 3D staircase as SVG and prints the first levels of the
binary tree that organises the balanced ternary words.
"""

import pathlib
import tempfile

from circwords.christoffel import Slope, christoffel
from circwords.geometry import PlaneSpec, path2d, path3d, plane_power, project_to_diagonal
from circwords.svg import svg_path
from circwords.tree import build_tree, export_dot

out = pathlib.Path(tempfile.mkdtemp(prefix="circwords-"))

# the 3D walk under a plane spells a ternary word; looking down the diagonal
# recovers the binary staircase it came from
plane = PlaneSpec(4, 3)
path, word = path3d(plane)
print("walk under z = (3/4)(x+y):", word)
flat = project_to_diagonal(path)
print("projected:", flat.word(), "==", christoffel(Slope(4, 3), plane_power(4)))

(out / "path2d.svg").write_text(svg_path(path2d(Slope(4, 3)), slope=(4, 3)))
(out / "path3d.svg").write_text(svg_path(path, slope=(4, 3)))

tree = build_tree(3)
for node in tree.walk():
    print(f"{str(node.pair):>8}  {node.triple}  {node.word}")
(out / "tree.dot").write_text(export_dot(tree))
print("files written to", out)
