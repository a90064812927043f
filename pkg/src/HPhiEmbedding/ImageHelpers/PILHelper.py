#         Python H_Phi Embedding Library
#      Released under the MIT license
#

import io

import numpy as np
from PIL import Image, ImageDraw


def _create_image(size, background):
    return Image.new("RGB", size, background)


def norm_colour(norm):
    """
    Colour of a norm value in [0, 1]: dark blue for small norms through to
    yellow for norm 1. Unbounded entries (None) are drawn in dark red.

    :rtype: (int, int, int)
    """
    if norm is None or not np.isfinite(norm):
        return (0x80, 0x10, 0x10)

    t = float(np.clip(norm, 0.0, 1.0))
    return (int(round(255 * t)), int(round(64 + 160 * t)), int(round(160 * (1.0 - t))))


def create_heatmap_image(norms, cell_size=(8, 8), background='black'):
    """
    Creates a new PIL Image showing a grid of embedding norms, one cell per
    grid point. Rows of ``norms`` run over the first sweep axis, drawn from the
    bottom of the image upwards.

    :param list(list(float)) norms: Norm grid, None for unbounded points.
    :param (int, int) cell_size: Width and height of each cell in pixels.
    :param str background: Background color to use, compatible with `PIL.Image.new()`.

    :rtype: PIL.Image
    :return: Created PIL image
    """
    rows = len(norms)
    columns = max((len(row) for row in norms), default=0)

    if rows == 0 or columns == 0:
        raise ValueError("Heat map needs a non-empty grid of norms.")

    width, height = cell_size
    image = _create_image((columns * width, rows * height), background)

    draw = ImageDraw.Draw(image)
    for i, row in enumerate(norms):
        top = (rows - 1 - i) * height
        for j, norm in enumerate(row):
            left = j * width
            draw.rectangle((left, top, left + width - 1, top + height - 1), fill=norm_colour(norm))

    return image


def to_png(image):
    """
    Encodes an image as PNG bytes.

    :rtype: bytes
    """
    with io.BytesIO() as compressed_image:
        image.save(compressed_image, "PNG")
        return compressed_image.getvalue()
