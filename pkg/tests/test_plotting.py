from heckeann.plotting import plot_coefficient_heatmap, plot_integer_matrix, plot_rank_comparison

PNG = b"\x89PNG\r\n\x1a\n"


def test_rank_comparison(tmp_path):
    out = plot_rank_comparison(["laurent", "gfp:p=2,v=1"], [10, 10], [10, 11], tmp_path / "r.png", "ranks")
    assert open(out, "rb").read(8) == PNG


def test_heatmap(tmp_path):
    out = plot_coefficient_heatmap([[1, -1], [0, 2]], ["a", "b"], ["x", "y"], tmp_path / "sub" / "h.png")
    assert open(out, "rb").read(8) == PNG


def test_integer_matrix(tmp_path):
    out = plot_integer_matrix([[1, 0], [0, 1]], ["r1", "r2"], ["c1", "c2"], tmp_path / "m.png")
    assert open(out, "rb").read(8) == PNG
