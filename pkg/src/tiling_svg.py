# src/tiling_svg.py

"""SVG export of the lozenge tiling attached to a path."""

import logging
import xml.etree.ElementTree as ET
from typing import Dict, List, Optional, Tuple

from src.gt import Path, lozenge_cells, tiling_coords

logger = logging.getLogger(__name__)

CSS_CLASSES = {0: "lozenge-h", 1: "lozenge-up", 2: "lozenge-down"}
STYLE = (
    ".lozenge-h { fill: #e8b04a; }\n"
    ".lozenge-up { fill: #4a7fe8; }\n"
    ".lozenge-down { fill: #7ac36a; }\n"
    "polygon { stroke: #202020; stroke-width: 0.5; }\n"
)

# Rhombus corners relative to the cell centre, in cell units
SHAPES: Dict[int, List[Tuple[float, float]]] = {
    0: [(-0.5, 0.0), (0.0, -0.5), (0.5, 0.0), (0.0, 0.5)],
    1: [(-0.5, -0.5), (0.0, -0.5), (0.5, 0.5), (0.0, 0.5)],
    2: [(0.0, -0.5), (0.5, -0.5), (0.0, 0.5), (-0.5, 0.5)],
}


def svg_root(width: float, height: float) -> ET.Element:
    return ET.Element("svg", xmlns="http://www.w3.org/2000/svg",
                      version="1.1",
                      width="{}px".format(width),
                      height="{}px".format(height),
                      viewBox="0 0 {} {}".format(width, height))


def svg_polygon(parent: ET.Element, points: List[Tuple[float, float]], css_class: str) -> ET.Element:
    text = " ".join("{:.2f},{:.2f}".format(x, y) for x, y in points)
    return ET.SubElement(parent, "polygon", points=text, attrib={"class": css_class})


def default_window(p: Path) -> Tuple[int, int]:
    xs = [x for _, x in tiling_coords(p)]
    return min(xs) - 1, max(xs) + 1


def render_tiling(p: Path, low: Optional[int] = None, high: Optional[int] = None, scale: float = 20.0) -> ET.Element:
    """
    One rhombus per cell (N, x) of the strip, low ≤ x ≤ high.

    Level N is drawn as row N from the top, sheared left by N/2 cells so
    that the three lozenge classes tile the plane.
    """
    if low is None or high is None:
        low, high = default_window(p)
    levels = p.length
    width = (high - low + 2 + levels / 2) * scale
    height = (levels + 1) * scale
    root = svg_root(width, height)
    ET.SubElement(root, "style").text = STYLE
    group = ET.SubElement(root, "g")
    for (n, x), kind in sorted(lozenge_cells(p, low, high).items()):
        cx = (x - low + 1 + (levels - n) / 2) * scale
        cy = (n - 0.5) * scale
        corners = [(cx + dx * scale, cy + dy * scale) for dx, dy in SHAPES[kind]]
        svg_polygon(group, corners, CSS_CLASSES[kind])
    return root


def write_svg(svg: ET.Element, name: str) -> None:
    ET.ElementTree(svg).write(name, encoding="unicode", xml_declaration=False)
    logger.info("wrote tiling SVG to %s", name)
