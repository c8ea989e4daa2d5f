"""
CSV ingestion of samples and CSV/JSON emission of result tables.
"""
import csv
import logging

import numpy as np
from rest_framework.renderers import JSONRenderer

from .discrete_fourier import Samples
from .exceptions import ConfigurationError
from .grids import nodes

logger = logging.getLogger(__name__)

NODE_MATCH_TOLERANCE = 1e-9
SIGNIFICANT_DIGITS = 17


def read_samples(stream, grid):
    """
    Read samples for `grid` from a CSV with header `j,f` or `x,f`.

    Rows may come in any order. With `x` every abscissa must match a node of
    the grid to within 1e-9 and each node must appear once.
    """
    reader = csv.reader(stream)
    try:
        header = [cell.strip().lower() for cell in next(reader)]
    except StopIteration:
        raise ConfigurationError('samples file is empty')
    if header not in (['j', 'f'], ['x', 'f']):
        raise ConfigurationError(f'samples header must be "j,f" or "x,f", got {",".join(header)!r}')

    values = np.full(grid.n_nodes, np.nan)
    grid_nodes = nodes(grid)
    for line, row in enumerate(reader, start=2):
        if not row or not ''.join(row).strip():
            continue
        if len(row) != 2:
            raise ConfigurationError(f'line {line}: expected 2 columns, got {len(row)}')
        try:
            position, value = float(row[0]), float(row[1])
        except ValueError:
            raise ConfigurationError(f'line {line}: non-numeric entry {row!r}')
        if not (np.isfinite(position) and np.isfinite(value)):
            raise ConfigurationError(f'line {line}: non-finite entry {row!r}')

        if header[0] == 'j':
            index = int(position)
            if index != position or not 1 <= index <= grid.n_nodes:
                raise ConfigurationError(f'line {line}: node index {row[0]!r} outside 1..{grid.n_nodes}')
            slot = index - 1
        else:
            slot = int(np.argmin(np.abs(grid_nodes - position)))
            if abs(grid_nodes[slot] - position) > NODE_MATCH_TOLERANCE:
                raise ConfigurationError(
                    f'line {line}: x={position!r} is not a node of {grid} '
                    f'(nearest {grid_nodes[slot]!r})'
                )
        if not np.isnan(values[slot]):
            raise ConfigurationError(f'line {line}: node {slot + 1} given twice')
        values[slot] = value

    missing = np.flatnonzero(np.isnan(values))
    if missing.size:
        raise ConfigurationError(f'samples missing for nodes {", ".join(str(j + 1) for j in missing)}')
    logger.debug('read %d samples for %s', grid.n_nodes, grid)
    return Samples(grid, values)


def format_cell(value, digits=SIGNIFICANT_DIGITS):
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    if isinstance(value, str):
        return value
    return format(float(value), f'.{digits}g')


def write_csv(stream, columns, rows, digits=SIGNIFICANT_DIGITS):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_cell(cell, digits) for cell in row])


def render_json(columns, rows):
    data = {
        'columns': list(columns),
        'rows': [[cell if isinstance(cell, str) else _plain(cell) for cell in row] for row in rows],
    }
    return JSONRenderer().render(data).decode('utf-8')


def _plain(value):
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return int(value)
    return float(value)


def write_table(stream, columns, rows, output_format='csv', digits=SIGNIFICANT_DIGITS):
    rows = list(rows)
    if output_format == 'json':
        stream.write(render_json(columns, rows))
        stream.write('\n')
    else:
        write_csv(stream, columns, rows, digits)
