# Copyright 2026 The pebbling-toolkit authors.
# All Rights Reserved.
#
# pebbling-toolkit is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License as published by
# the Free Software Foundation, either version 2.1 of the License, or
# (at your option) any later version.
#
# pebbling-toolkit is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.

# You should have received a copy of the GNU Lesser General Public License
# along with pebbling-toolkit.  If not, see <http://www.gnu.org/licenses/>.

import sys

from pebbling_toolkit import errors


def print_table(table, first_row_header=True, stream=None):
    """Prints rows (lists of cells) as " | " separated columns padded to the
    widest cell, the first row framed by "-+-" rules as the header.
    """

    stream = sys.stdout if stream is None else stream

    column_max_sizes = {}
    for row in table:
        for i, column_cell in enumerate(row):
            column_max_sizes[i] = \
                max(column_max_sizes.get(i, 0), len(str(column_cell)))

    def format_row(row):
        return " | ".join(
            str(cell).ljust(column_max_sizes[i]) for i, cell in enumerate(row)
        ).rstrip()

    separator = "-+-".join(
        "-" * max_size for _, max_size in sorted(column_max_sizes.items())
    )

    start_row = 0

    if first_row_header:
        assert(len(table) > 0)

        stream.write(separator + "\n")
        stream.write(format_row(table[start_row]) + "\n")
        stream.write(separator + "\n")
        start_row += 1

    for row in table[start_row:]:
        stream.write(format_row(row) + "\n")


def print_key_values(pairs, porcelain=False, stream=None):
    """Prints (key, value) pairs as "key=value" lines when porcelain is set,
    as an aligned two column table otherwise.
    """

    stream = sys.stdout if stream is None else stream
    if porcelain:
        for key, value in pairs:
            stream.write("%s=%s\n" % (key, format_value(value)))
        return

    width = max([len(key) for key, _ in pairs] or [0])
    for key, value in pairs:
        stream.write("%s  %s\n" % (key.ljust(width), format_value(value)))


def format_value(value):
    if isinstance(value, (list, tuple)):
        return ",".join(format_value(item) for item in value)
    if isinstance(value, (set, frozenset)):
        return ",".join(format_value(item) for item in sorted(value))
    if value is None:
        return "-"
    return str(value)


def parse_unit_spec(spec):
    """Parses "v:k", a unit of k pebbles on vertex v."""

    vertex, sep, count = spec.partition(":")
    try:
        if not sep:
            raise ValueError()
        return int(vertex), int(count)
    except ValueError:
        raise errors.ParseError(
            "Unit has to be given as 'vertex:count', got '%s'." % (spec)
        )
