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

import unit_test_harness
import io
import os.path

from pebbling_toolkit import config


class ConfigTest(unit_test_harness.ToolkitTest):
    def setup_data(self):
        super(ConfigTest, self).setup_data()

        self.copy_to_data("config_test.ini")

    def check_values(self, configuration):
        assert(configuration.jobs == 8)
        assert(configuration.output_dir == self.data_path("results"))

        assert(configuration.node_budget == 500000)
        assert(configuration.time_budget == 12.5)
        assert(configuration.max_vertices == 40)
        assert(configuration.max_pebbles == 16)
        assert(configuration.symmetry == "none")
        assert(configuration.automorphism_limit == 100)

        assert(configuration.step_limit == 250)

        assert(configuration.verify_max_n == 7)
        assert(configuration.verify_max_pebbles == 5)
        assert(configuration.verify_unit_sizes == [2, 4, 6])
        assert(configuration.verify_random_graphs == 10)
        assert(configuration.verify_random_max_n == 9)
        assert(configuration.verify_random_max_degree == 4)
        assert(configuration.verify_seed == 42)
        assert(configuration.verify_torus_min == 6)
        assert(configuration.verify_torus_max == 8)
        assert(configuration.verify_unit_max == 10)
        assert(configuration.verify_path_max == 12)
        assert(configuration.verify_grid_max == 5)

    def test(self):
        super(ConfigTest, self).test()

        configuration = config.Configuration()
        full_path = os.path.abspath(self.data_path("config_test.ini"))
        configuration.load(full_path)
        assert(configuration.config_file == full_path)
        self.check_values(configuration)
        configuration.sanity_check()

        saved_full_path = self.data_path("config_test_s.ini")
        configuration.save_as(saved_full_path)
        assert(configuration.config_file == saved_full_path)

        configuration2 = config.Configuration()
        configuration2.load(saved_full_path)
        assert(configuration2.config_file == saved_full_path)
        self.check_values(configuration2)

        stream = io.StringIO()
        configuration2.save_as(stream)
        assert("[Verify]" in stream.getvalue())
        assert(configuration2.config_file == saved_full_path)

        # environment wins over the file
        configuration3 = config.load_configuration(
            environ={"PEBBLING_CONFIG_FILE": full_path, "PEBBLING_JOBS": "3"}
        )
        assert(configuration3.config_file == full_path)
        assert(configuration3.jobs == 3)
        assert(configuration3.symmetry == "none")

        defaults = config.load_configuration(environ={})
        assert(defaults.config_file is None)
        assert(defaults.jobs == 1)
        assert(defaults.symmetry == "auto")
        assert(defaults.verify_unit_sizes == [2, 3, 4])
        assert(defaults.verify_unit_max == 16)
        assert(defaults.verify_torus_max == 8)
        assert(defaults.verify_grid_max == 8)


class InvalidConfigTest(unit_test_harness.ToolkitTest):
    def write(self, name, text):
        with open(self.data_path(name), "w") as f:
            f.write(text)

    def expect_error(self, callback):
        try:
            callback()
        except config.ConfigurationError:
            return
        assert(False)

    def test(self):
        super(InvalidConfigTest, self).test()

        self.expect_error(lambda: config.Configuration().load(
            self.data_path("missing.ini")))

        self.write("bad_int.ini", "[General]\njobs=many\n")
        self.expect_error(lambda: config.Configuration().load(
            self.data_path("bad_int.ini")))

        self.write("bad_symmetry.ini", "[Search]\nsymmetry=sometimes\n")
        self.expect_error(lambda: config.load_configuration(
            self.data_path("bad_symmetry.ini"), environ={}))

        self.write("bad_units.ini", "[Verify]\nunit-sizes=1,2\n")
        self.expect_error(lambda: config.load_configuration(
            self.data_path("bad_units.ini"), environ={}))

        self.write("bad_torus.ini", "[Verify]\ntorus-min=7\ntorus-max=6\n")
        self.expect_error(lambda: config.load_configuration(
            self.data_path("bad_torus.ini"), environ={}))

        self.expect_error(lambda: config.load_configuration(
            environ={"PEBBLING_JOBS": "x"}))

        # sections that are missing keep their defaults
        self.write("partial.ini", "[Transform]\nstep-limit=5\n")
        partial = config.load_configuration(self.data_path("partial.ini"),
                                            environ={})
        assert(partial.step_limit == 5)
        assert(partial.max_pebbles == 24)


def test_config_round_trip():
    ConfigTest.run()


def test_invalid_config():
    InvalidConfigTest.run()


if __name__ == "__main__":
    ConfigTest.run()
    InvalidConfigTest.run()
