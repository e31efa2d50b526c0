#!/usr/bin/python

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

import os
import os.path

from setuptools import setup


# the package __init__ imports networkx
version = {}
with open(os.path.join("pebbling_toolkit", "version.py")) as f:
    exec(f.read(), version)


def get_packages():
    # Crawls the hierarchy and gathers all packages, listing them by hand is
    # tedious and prone to errors.

    ret = ["pebbling_toolkit"]

    for dirpath, _, files in os.walk("pebbling_toolkit"):
        if "__init__.py" in files and dirpath != "pebbling_toolkit":
            ret.append(dirpath.replace(os.path.sep, "."))

    return ret


setup(
    name="pebbling_toolkit",
    version=version["VERSION_STRING"],
    author="The pebbling-toolkit authors",
    description="Exact reachability, cooperation analysis and lower bounds "
    "for optimal graph pebbling",
    license="LGPL2.1+",
    packages=get_packages(),
    scripts=[
        os.path.join("bin", "pebbling-toolkit")
    ],
    install_requires=[
        "networkx>=2.5",
        "PuLP>=2.4",
    ],
    extras_require={
        "test": ["pytest", "hypothesis"],
    },
)
