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


from pebbling_toolkit.graph_core import Graph
from pebbling_toolkit.pebbling_engine import PebbleDistribution
from pebbling_toolkit.pebbling_engine import ReachabilityReport
from pebbling_toolkit.decomposition import CooperationReport
from pebbling_toolkit.decomposition import UnitDistribution
from pebbling_toolkit.config import Configuration


__all__ = ["Graph", "PebbleDistribution", "ReachabilityReport",
           "CooperationReport", "UnitDistribution", "Configuration"]
