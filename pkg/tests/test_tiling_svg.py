from src.gt import Path, Signature, lozenge_cells
from src.tiling_svg import CSS_CLASSES, default_window, render_tiling, write_svg


def zero_path(n):
    return Path(tuple(Signature.zero(k) for k in range(1, n + 1)))


def test_default_window():
    assert default_window(zero_path(3)) == (-2, 2)


def test_one_polygon_per_cell():
    path = Path((Signature((1,)), Signature((1, 0)), Signature((2, 1, -1))))
    svg = render_tiling(path, -3, 3)
    polygons = svg.findall("./g/polygon")
    cells = lozenge_cells(path, -3, 3)
    assert len(polygons) == len(cells)
    classes = {p.get("class") for p in polygons}
    assert classes <= set(CSS_CLASSES.values())
    horizontal = sum(1 for p in polygons if p.get("class") == "lozenge-h")
    assert horizontal == 1 + 2 + 3
    assert svg.find("style") is not None


def test_write_svg(tmp_path):
    target = tmp_path / "tiling.svg"
    write_svg(render_tiling(zero_path(2)), str(target))
    text = target.read_text()
    assert text.startswith("<svg")
    assert "lozenge-h" in text
