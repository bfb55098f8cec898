"""Figure reproduction: certified complement rasters of slices, constructive
Parry-root slices, the 3D point cloud of the teapot, and the slice-asymmetry
computation.

Outputs are toolchain-neutral and diffable: CSV for point clouds (floats in
shortest round-trip form), binary 8-bit PGM for rasters (0 = certified out,
128 = inconclusive, 255 = unit circle), optional matplotlib PNG companions.
All renderers canonicalize ordering (row-major pixels, sorted points) so
identical inputs give byte-identical files regardless of worker schedule.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .membership import AmbiguousModulus, Verdict, certify_inside, test_point
from .rates import GrowthRate, RateLike
from .roots import NonConvergence, all_roots, leading_root
from .series import IntPolynomial, h_coefficients, parry_polynomial
from .words import Word, is_admissible
from .kneading import itinerary_prefix

CODE_CERTIFIED_OUT = 0
CODE_INCONCLUSIVE = 128
CODE_UNIT_CIRCLE = 255

_VERDICT_CODE = {
    Verdict.CERTIFIED_OUT: CODE_CERTIFIED_OUT,
    Verdict.INCONCLUSIVE: CODE_INCONCLUSIVE,
    Verdict.MEMBER: CODE_UNIT_CIRCLE,
}

# The degree-14 slope polynomial whose small Galois conjugate witnesses the
# reflection asymmetry of the height-1.82 slice (leading root ~1.81492).
ASYMMETRY_WITNESS = IntPolynomial([-1, 0, 1, 0, -1, 0, 1, -2, 3, -4, 3, -2, 1, -2, 1])
ASYMMETRY_CONJUGATE = complex(-0.5840341196392905, 0.4820600149798202)
ASYMMETRY_RATE = "1.82"


@dataclass(frozen=True)
class SliceRaster:
    """Per-pixel certification verdicts over a rectangle in C."""

    rate: GrowthRate
    bounds: tuple[float, float, float, float]  # re_min, re_max, im_min, im_max
    resolution: int
    depth: int
    codes: tuple[int, ...]  # row-major, row 0 at im_max
    depths: tuple[int, ...]
    margins: tuple[float, ...]
    error_count: int

    def pixel_center(self, row: int, col: int) -> complex:
        re_min, re_max, im_min, im_max = self.bounds
        dx = (re_max - re_min) / self.resolution
        dy = (im_max - im_min) / self.resolution
        return complex(re_min + (col + 0.5) * dx, im_max - (row + 0.5) * dy)

    def code_at(self, row: int, col: int) -> int:
        return self.codes[row * self.resolution + col]

    @property
    def half_pixel(self) -> float:
        re_min, re_max, im_min, im_max = self.bounds
        return 0.5 * max(
            (re_max - re_min) / self.resolution, (im_max - im_min) / self.resolution
        )


@dataclass(frozen=True)
class TeapotCloud:
    """(Re z, Im z, lambda) triples from kneading-series partial sums."""

    points: tuple[tuple[float, float, float], ...]
    rate_count: int
    degree: int
    lambda_range: tuple[float, float]
    skipped: int


def _pixel_jobs(bounds, resolution):
    re_min, re_max, im_min, im_max = bounds
    dx = (re_max - re_min) / resolution
    dy = (im_max - im_min) / resolution
    for row in range(resolution):
        im = im_max - (row + 0.5) * dy
        for col in range(resolution):
            yield complex(re_min + (col + 0.5) * dx, im)


def _classify_pixel(z: complex, rate: GrowthRate, depth: int, half_px: float):
    if abs(abs(z) - 1.0) <= half_px:
        return CODE_UNIT_CIRCLE, 0, 0.0, False
    try:
        cert = test_point(z, rate, depth)
    except AmbiguousModulus:
        return CODE_INCONCLUSIVE, 0, 0.0, True
    return _VERDICT_CODE[cert.verdict], cert.depth, cert.margin, False


_worker_state: dict = {}


def _init_worker(rate: GrowthRate, depth: int, half_px: float) -> None:
    _worker_state["args"] = (rate, depth, half_px)


def _row_worker(centers: list[complex]):
    rate, depth, half_px = _worker_state["args"]
    return [_classify_pixel(z, rate, depth, half_px) for z in centers]


def render_slice_certified(
    rate: RateLike,
    bounds: tuple[float, float, float, float] = (-1.0, 1.0, -1.0, 1.0),
    resolution: int = 100,
    depth: int = 14,
    threads: int = 1,
) -> SliceRaster:
    """Certify every pixel center of a slice window; deterministic output
    independent of the worker schedule.  Pixels whose center lies within
    half a pixel of the unit circle are marked as circle pixels."""
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    rate = GrowthRate.convert(rate)
    re_min, re_max, im_min, im_max = bounds
    half_px = 0.5 * max((re_max - re_min) / resolution, (im_max - im_min) / resolution)
    centers = list(_pixel_jobs(bounds, resolution))
    rows = [centers[i : i + resolution] for i in range(0, len(centers), resolution)]
    if threads > 1:
        import multiprocessing as mp

        ctx = mp.get_context("fork")
        with ctx.Pool(
            threads, initializer=_init_worker, initargs=(rate, depth, half_px)
        ) as pool:
            row_results = pool.map(_row_worker, rows)
        results = [cell for row in row_results for cell in row]
    else:
        _init_worker(rate, depth, half_px)
        results = [cell for row in rows for cell in _row_worker(row)]
    codes, depths, margins, errors = zip(*results)
    return SliceRaster(
        rate,
        bounds,
        resolution,
        depth,
        tuple(codes),
        tuple(depths),
        tuple(margins),
        sum(errors),
    )


def admissible_words(max_length: int) -> Iterator[Word]:
    """All admissible words of length 2..max_length, by pruned DFS.

    A shift comparison that is strictly decided within the known letters
    stays decided for every extension, so branches with a decided
    greater-than shift are cut; surviving candidates get the full
    periodic-wraparound admissibility check.
    """
    if max_length < 2:
        return
    # node: (letters, prefix signs by length, undecided shift offsets);
    # the root "10" itself has sign -1 and is never admissible
    stack = [([1, 0], [1, -1, -1], [1])]
    while stack:
        letters, signs, undecided = stack.pop()
        n = len(letters)
        if n == max_length:
            continue
        for a in (0, 1):
            keep = []
            dead = False
            for k in undecided:
                i = n - k  # new comparison position within the word
                b = letters[i]
                if a == b:
                    keep.append(k)
                    continue
                if signs[i] * (b - a) > 0:
                    continue  # shift decided <=_E, drop k
                dead = True
                break
            if dead:
                continue
            if a == letters[0]:
                keep.append(n)  # the new shift sigma^n is still undecided
            letters2 = letters + [a]
            signs2 = signs + [signs[-1] * (-1 if a else 1)]
            word = Word(letters2)
            if word.sign == 1 and is_admissible(word):
                yield word
            stack.append((letters2, signs2, keep))


def render_slice_constructive(
    rate: RateLike, max_word_length: int
) -> list[complex]:
    """Roots of modulus <= 1 of the Parry polynomials of all admissible words
    of length <= max_word_length whose leading root is below the slice height."""
    if max_word_length < 2:
        raise ValueError("max_word_length must be >= 2")
    rate = GrowthRate.convert(rate)
    height = rate.value
    points: set[complex] = set()
    skipped = 0
    for word in admissible_words(max_word_length):
        p = parry_polynomial(word)
        lr = leading_root(p)
        if lr is None or not lr < height:
            continue
        try:
            rs = all_roots(p)
        except NonConvergence:
            skipped += 1
            continue
        for r in rs.roots:
            if abs(r) <= 1 + 1e-9:
                points.add(r)
    if skipped:
        import warnings

        warnings.warn(f"root solving failed for {skipped} words; points omitted")
    return sorted(points, key=lambda r: (r.real, r.imag))


def teapot_cloud(
    rate_count: int,
    degree: int,
    lambda_range: tuple[float, float] = (1.01, 2.0),
) -> TeapotCloud:
    """Roots outside the unit cylinder of degree-`degree` partial sums of
    H(It_lambda, .) over a uniform grid of growth rates."""
    if rate_count < 1:
        raise ValueError("rate_count must be >= 1")
    if degree < 2:
        raise ValueError("degree must be >= 2")
    lo, hi = lambda_range
    points: list[tuple[float, float, float]] = []
    skipped = 0
    for i in range(rate_count):
        lam = lo if rate_count == 1 else lo + i * (hi - lo) / (rate_count - 1)
        try:
            rate = GrowthRate.from_float(lam)
            letters = itinerary_prefix(rate, degree).letters
            partial = IntPolynomial(h_coefficients(letters, degree + 1))
            rs = all_roots(partial)
        except (ValueError, NonConvergence):
            skipped += 1
            continue
        rate_points = []
        for u in rs.roots:
            if 0 < abs(u) < 1.0:
                z = 1 / u
                rate_points.append((z.real, z.imag, lam))
        rate_points.sort()
        points.extend(rate_points)
    return TeapotCloud(tuple(points), rate_count, degree, (lo, hi), skipped)


# -- asymmetry reproduction ------------------------------------------------


@dataclass(frozen=True)
class AsymmetryStage:
    name: str
    passed: bool
    detail: str


def asymmetry_report(depth: int = 20) -> list[AsymmetryStage]:
    """The slice-asymmetry computation: the witness conjugate belongs to the
    height-1.82 slice while its reflection across the imaginary axis is
    certified out, so the slice is not symmetric under z -> -conj(z)."""
    stages = []
    lr = leading_root(ASYMMETRY_WITNESS)
    ok = lr is not None and abs(lr - 1.8149185987640513) < 1e-9 and lr < 1.82
    stages.append(
        AsymmetryStage(
            "witness-leading-root",
            ok,
            f"leading_root={lr!r} target=1.8149185987640513 (< 1.82)",
        )
    )
    rs = all_roots(ASYMMETRY_WITNESS)
    best = min(rs.roots, key=lambda r: abs(r - ASYMMETRY_CONJUGATE))
    dist = abs(best - ASYMMETRY_CONJUGATE)
    stages.append(
        AsymmetryStage(
            "witness-conjugate-in-disk",
            dist < 1e-6 and abs(best) < 1,
            f"root={best!r} distance={dist:.3e}",
        )
    )
    rate = GrowthRate.parse(ASYMMETRY_RATE)
    cert = certify_inside(-best, rate, depth)
    stages.append(
        AsymmetryStage(
            "mirror-certified-out",
            cert.verdict is Verdict.CERTIFIED_OUT,
            f"verdict={cert.verdict.value} depth={cert.depth} margin={cert.margin:.6g}",
        )
    )
    all_ok = all(s.passed for s in stages)
    stages.append(
        AsymmetryStage(
            "slice-asymmetry",
            all_ok,
            "member z and certified-out -z: the 1.82 slice is not (-z)-symmetric"
            if all_ok
            else "incomplete",
        )
    )
    return stages


# -- file output -------------------------------------------------------------


def write_points_csv(path: str, rows: Sequence[Sequence[float]], header: str) -> None:
    """Delimited output with shortest round-trip float formatting."""
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(header.rstrip("\n") + "\n")
        for row in rows:
            fh.write(",".join(repr(float(v)) for v in row) + "\n")


def write_cloud_csv(path: str, cloud: TeapotCloud) -> None:
    write_points_csv(path, cloud.points, "re,im,lambda")


def write_slice_points_csv(path: str, points: Sequence[complex]) -> None:
    write_points_csv(path, [(p.real, p.imag) for p in points], "re,im")


def write_raster_pgm(path: str, raster: SliceRaster) -> None:
    """Binary 8-bit PGM: 0 certified out, 128 inconclusive, 255 unit circle."""
    n = raster.resolution
    with open(path, "wb") as fh:
        fh.write(f"P5\n{n} {n}\n255\n".encode("ascii"))
        fh.write(bytes(raster.codes))


def write_raster_csv(path: str, raster: SliceRaster) -> None:
    rows = []
    for row in range(raster.resolution):
        for col in range(raster.resolution):
            z = raster.pixel_center(row, col)
            i = row * raster.resolution + col
            rows.append(
                (z.real, z.imag, raster.codes[i], raster.depths[i], raster.margins[i])
            )
    write_points_csv(path, rows, "re,im,verdict,depth,margin")


# -- matplotlib companions ---------------------------------------------------


def _pyplot():
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    return plt


def plot_teapot(cloud: TeapotCloud, path: str) -> None:
    plt = _pyplot()
    fig = plt.figure(figsize=(8, 8))
    ax = fig.add_subplot(projection="3d")
    xs = [p[0] for p in cloud.points]
    ys = [p[1] for p in cloud.points]
    zs = [p[2] for p in cloud.points]
    ax.scatter(xs, ys, zs, s=0.3, c=zs, cmap="viridis", linewidths=0)
    ax.set_xlabel("Re z")
    ax.set_ylabel("Im z")
    ax.set_zlabel("growth rate")
    fig.savefig(path, dpi=200)
    plt.close(fig)


def plot_slice_points(points: Sequence[complex], path: str) -> None:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 7))
    ax.scatter([p.real for p in points], [p.imag for p in points], s=0.5, c="k", linewidths=0)
    circle = plt.Circle((0, 0), 1, fill=False, color="0.6", linewidth=0.6)
    ax.add_patch(circle)
    ax.set_aspect("equal")
    ax.set_xlabel("Re z")
    ax.set_ylabel("Im z")
    fig.savefig(path, dpi=200)
    plt.close(fig)


def plot_raster(raster: SliceRaster, path: str) -> None:
    plt = _pyplot()
    import numpy as np

    img = np.array(raster.codes, dtype=np.uint8).reshape(
        raster.resolution, raster.resolution
    )
    re_min, re_max, im_min, im_max = raster.bounds
    fig, ax = plt.subplots(figsize=(7, 7))
    ax.imshow(
        img,
        cmap="gray",
        vmin=0,
        vmax=255,
        extent=(re_min, re_max, im_min, im_max),
        origin="upper",
        interpolation="nearest",
    )
    ax.set_xlabel("Re z")
    ax.set_ylabel("Im z")
    fig.savefig(path, dpi=200)
    plt.close(fig)
