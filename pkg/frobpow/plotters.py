"""
Collection of plotters

Oct-2026
"""

import logging as log
from fractions import Fraction

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt

from .fractal import cells, constraint_lines, level_line
from .monomials import format_monomial

# ------------ STYLE ----------------------------

FIG_SIZE_PX = 480
DPI = 72
GRID_COLOR = '#000000'
LINE_COLOR = '#555555'
LINE_STYLE = '--'
LINE_WIDTH = 0.8
OVERLAY_COLOR = '#c0392b'
OVERLAY_WIDTH = 1.5
LABEL_SIZE = 9
SVG_HASH_SALT = 'frobpow'


# ------------ PLOTTERS ----------------------------


def _xy(point):
    return float(point[0]), float(point[1])


def plot_subdivision(ideal, q, filename, overlay=(), labels=True):
    """
    Draw the cells of [0, q]^2 on which floor(A u / q) is constant.

    :param ideal: monomial ideal with exactly two generators
    :param q: side length of the square
    :param filename: output path, written as SVG
    :param overlay: values t; each draws the level line u_1 + u_2 = t q
    :param labels: print the monomial x^floor(A u / q) inside every cell
    :return: the list of cells drawn
    """
    subdivision = cells(ideal, q)
    segments = constraint_lines(ideal, q)

    plt.rcParams['svg.hashsalt'] = SVG_HASH_SALT
    plt.rcParams['svg.fonttype'] = 'none'
    size = FIG_SIZE_PX / DPI
    fig, ax = plt.subplots(figsize=(size, size), dpi=DPI)

    ax.plot([0, q, q, 0, 0], [0, 0, q, q, 0], color=GRID_COLOR, linewidth=LINE_WIDTH)
    for seg in segments:
        (x0, y0), (x1, y1) = _xy(seg.start), _xy(seg.end)
        ax.plot([x0, x1], [y0, y1], color=LINE_COLOR, linestyle=LINE_STYLE, linewidth=LINE_WIDTH)

    for t in overlay:
        ends = level_line(Fraction(t), q)
        if ends is None:
            log.info('Level line t={} misses the square.'.format(t))
            continue
        (x0, y0), (x1, y1) = _xy(ends[0]), _xy(ends[1])
        ax.plot([x0, x1], [y0, y1], color=OVERLAY_COLOR, linewidth=OVERLAY_WIDTH)

    if labels:
        for cell in subdivision:
            x, y = _xy(cell.sample)
            ax.text(x, y, format_monomial(cell.label, ideal.variables, sep=''),
                    ha='center', va='center', fontsize=LABEL_SIZE)

    ax.set_xlim(0, q)
    ax.set_ylim(0, q)
    ax.set_aspect('equal')
    ax.set_xticks([0, q])
    ax.set_yticks([0, q])
    ax.set_xlabel('u_1')
    ax.set_ylabel('u_2')

    fig.savefig(filename, format='svg', metadata={'Date': None})
    plt.close(fig)
    log.info('Wrote {} cells to {}.'.format(len(subdivision), filename))
    return subdivision
