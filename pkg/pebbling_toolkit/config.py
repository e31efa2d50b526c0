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

import configparser
import logging
import os
import os.path

from pebbling_toolkit import errors


class ConfigurationError(errors.PebblingError):
    pass


SYMMETRY_MODES = ("auto", "none")


def _parse_int_list(value):
    ret = []
    for item in value.split(","):
        item = item.strip()
        if item == "":
            continue
        try:
            ret.append(int(item))
        except ValueError:
            raise ConfigurationError(
                "Expected a comma separated list of integers, got '%s'." %
                (value)
            )
    return ret


class Configuration(object):
    def __init__(self):
        self.config_file = None

        # General section
        self.jobs = 1
        self.output_dir = os.path.abspath(os.curdir)

        # Search section
        # 0 means unlimited for both budgets
        self.node_budget = 0
        self.time_budget = 0.0
        self.max_vertices = 64
        self.max_pebbles = 24
        self.symmetry = "auto"
        self.automorphism_limit = 20000

        # Transform section
        self.step_limit = 10000

        # Verify section
        self.verify_max_n = 6
        self.verify_max_pebbles = 4
        self.verify_unit_sizes = [2, 3, 4]
        self.verify_random_graphs = 0
        self.verify_random_max_n = 8
        self.verify_random_max_degree = 5
        self.verify_seed = 0
        self.verify_torus_min = 5
        self.verify_torus_max = 8
        self.verify_unit_max = 16
        self.verify_path_max = 10
        self.verify_grid_max = 8

    def apply_environment(self, environ=None):
        """Applies overrides from PEBBLING_JOBS. The config file named by
        PEBBLING_CONFIG_FILE is handled by the caller because it has to be
        loaded before any override.
        """

        environ = os.environ if environ is None else environ
        jobs = environ.get("PEBBLING_JOBS", "")
        if jobs != "":
            try:
                self.jobs = int(jobs)
            except ValueError:
                raise ConfigurationError(
                    "PEBBLING_JOBS has to be an integer, got '%s'." % (jobs)
                )
            logging.debug("Job count overridden to %i from environment.",
                          self.jobs)

    def load(self, config_file):
        config = configparser.ConfigParser()
        if not config.read(config_file):
            raise ConfigurationError(
                "Can't read configuration file '%s'." % (config_file)
            )

        base_dir = os.path.dirname(os.path.abspath(config_file))

        def absolutize(path):
            path = str(path)
            if path == "" or os.path.isabs(path):
                return path

            return os.path.normpath(os.path.join(base_dir, path))

        def get_int(section, option):
            try:
                return config.getint(section, option)
            except ValueError:
                raise ConfigurationError(
                    "Option '%s' in section [%s] of '%s' has to be an "
                    "integer." % (option, section, config_file)
                )

        # General section
        try:
            self.jobs = get_int("General", "jobs")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        try:
            self.output_dir = absolutize(config.get("General", "output-dir"))
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        # Search section
        try:
            self.node_budget = get_int("Search", "node-budget")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        try:
            self.time_budget = config.getfloat("Search", "time-budget")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        try:
            self.max_vertices = get_int("Search", "max-vertices")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        try:
            self.max_pebbles = get_int("Search", "max-pebbles")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        try:
            self.symmetry = config.get("Search", "symmetry").strip().lower()
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        try:
            self.automorphism_limit = \
                get_int("Search", "automorphism-limit")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        # Transform section
        try:
            self.step_limit = get_int("Transform", "step-limit")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        # Verify section
        try:
            self.verify_max_n = get_int("Verify", "max-n")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        try:
            self.verify_max_pebbles = get_int("Verify", "max-pebbles")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        try:
            self.verify_unit_sizes = \
                _parse_int_list(config.get("Verify", "unit-sizes"))
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        try:
            self.verify_random_graphs = get_int("Verify", "random-graphs")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        try:
            self.verify_random_max_n = get_int("Verify", "random-max-n")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        try:
            self.verify_random_max_degree = \
                get_int("Verify", "random-max-degree")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        try:
            self.verify_seed = get_int("Verify", "seed")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        try:
            self.verify_torus_min = get_int("Verify", "torus-min")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        try:
            self.verify_torus_max = get_int("Verify", "torus-max")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        try:
            self.verify_unit_max = get_int("Verify", "unit-max")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        try:
            self.verify_path_max = get_int("Verify", "path-max")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        try:
            self.verify_grid_max = get_int("Verify", "grid-max")
        except (configparser.NoOptionError, configparser.NoSectionError):
            pass

        self.config_file = config_file
        logging.info("Loaded configuration from '%s'.", config_file)

    def save_as(self, config_file):
        config = configparser.ConfigParser()

        config.add_section("General")
        config.set("General", "jobs", str(self.jobs))
        config.set("General", "output-dir", str(self.output_dir))

        config.add_section("Search")
        config.set("Search", "node-budget", str(self.node_budget))
        config.set("Search", "time-budget", str(self.time_budget))
        config.set("Search", "max-vertices", str(self.max_vertices))
        config.set("Search", "max-pebbles", str(self.max_pebbles))
        config.set("Search", "symmetry", str(self.symmetry))
        config.set("Search", "automorphism-limit",
                   str(self.automorphism_limit))

        config.add_section("Transform")
        config.set("Transform", "step-limit", str(self.step_limit))

        config.add_section("Verify")
        config.set("Verify", "max-n", str(self.verify_max_n))
        config.set("Verify", "max-pebbles", str(self.verify_max_pebbles))
        config.set("Verify", "unit-sizes",
                   ",".join(str(size) for size in self.verify_unit_sizes))
        config.set("Verify", "random-graphs", str(self.verify_random_graphs))
        config.set("Verify", "random-max-n", str(self.verify_random_max_n))
        config.set("Verify", "random-max-degree",
                   str(self.verify_random_max_degree))
        config.set("Verify", "seed", str(self.verify_seed))
        config.set("Verify", "torus-min", str(self.verify_torus_min))
        config.set("Verify", "torus-max", str(self.verify_torus_max))
        config.set("Verify", "unit-max", str(self.verify_unit_max))
        config.set("Verify", "path-max", str(self.verify_path_max))
        config.set("Verify", "grid-max", str(self.verify_grid_max))

        if hasattr(config_file, "write"):
            # config_file is an already opened file, let's use it like one
            config.write(config_file)

        else:
            # treat config_file as a path
            try:
                with open(config_file, "w") as f:
                    config.write(f)
            except (IOError, OSError) as e:
                raise errors.WriteFailure(
                    "Failed to write configuration to '%s': %s" %
                    (config_file, e)
                )

            self.config_file = config_file

    def save(self):
        self.save_as(self.config_file)

    def prepare_dirs(self):
        if not os.path.exists(self.output_dir):
            logging.info(
                "Creating output directory at '%s' because it didn't exist.",
                self.output_dir
            )
            os.makedirs(self.output_dir)

    def sanity_check(self):
        def check_min(value, minimum, config_file_entry):
            if value < minimum:
                raise ConfigurationError(
                    "Value %r given for '%s' has to be at least %r." %
                    (value, config_file_entry, minimum)
                )

        if os.path.exists(self.output_dir) and \
                not os.path.isdir(self.output_dir):
            raise ConfigurationError(
                "Path '%s' given for the output folder (config file entry: "
                "output-dir) is not a directory." % (self.output_dir)
            )

        check_min(self.jobs, 1, "jobs")
        check_min(self.node_budget, 0, "node-budget")
        check_min(self.time_budget, 0, "time-budget")
        check_min(self.max_vertices, 1, "max-vertices")
        check_min(self.max_pebbles, 1, "max-pebbles")
        check_min(self.automorphism_limit, 1, "automorphism-limit")
        check_min(self.step_limit, 1, "step-limit")
        check_min(self.verify_max_n, 1, "max-n")
        check_min(self.verify_max_pebbles, 0, "max-pebbles")
        check_min(self.verify_random_graphs, 0, "random-graphs")
        check_min(self.verify_random_max_n, 2, "random-max-n")
        check_min(self.verify_random_max_degree, 1, "random-max-degree")
        check_min(self.verify_torus_min, 3, "torus-min")
        check_min(self.verify_unit_max, 1, "unit-max")
        check_min(self.verify_path_max, 1, "path-max")
        check_min(self.verify_grid_max, 2, "grid-max")

        if self.symmetry not in SYMMETRY_MODES:
            raise ConfigurationError(
                "Symmetry mode '%s' is invalid, expected one of %s." %
                (self.symmetry, ", ".join(SYMMETRY_MODES))
            )

        if not self.verify_unit_sizes or \
                any(size < 2 for size in self.verify_unit_sizes):
            raise ConfigurationError(
                "Every entry of 'unit-sizes' has to be at least 2, got %s." %
                (self.verify_unit_sizes)
            )

        if self.verify_torus_max < self.verify_torus_min:
            raise ConfigurationError(
                "'torus-max' (%i) is smaller than 'torus-min' (%i)." %
                (self.verify_torus_max, self.verify_torus_min)
            )


def load_configuration(config_file=None, environ=None):
    """Returns a Configuration built from defaults, the given config file (or
    the one named by PEBBLING_CONFIG_FILE) and environment overrides.
    """

    environ = os.environ if environ is None else environ
    ret = Configuration()

    if config_file is None:
        config_file = environ.get("PEBBLING_CONFIG_FILE", "") or None

    if config_file is not None:
        ret.load(config_file)

    ret.apply_environment(environ)
    ret.sanity_check()
    return ret
