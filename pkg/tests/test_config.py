"""Tests for configuration parsing and run configuration."""

import json
import os
import shutil
import tempfile
import unittest

import yaml
from pydantic import ValidationError

from entrydeterrence.errors import ConfigError
from entrydeterrence.policy.config_parser import ConfigParser
from entrydeterrence.policy.run_config import RunConfig, ValueRange


class TestConfigParser(unittest.TestCase):
    """Test cases for the ConfigParser class."""

    def setUp(self):
        """Set up test environment."""
        self.temp_dir = tempfile.mkdtemp()
        self.parser = ConfigParser()

    def tearDown(self):
        """Clean up test environment."""
        shutil.rmtree(self.temp_dir)

    def _write(self, name: str, text: str) -> str:
        path = os.path.join(self.temp_dir, name)
        with open(path, "w") as f:
            f.write(text)
        return path

    def test_defaults_without_path(self):
        config = self.parser.parse()
        self.assertEqual(config["model"], {"alpha": 10.0, "beta": 2.0, "theta": 2.0, "phi": 0.5, "c": 2.0})
        self.assertEqual(config["entry_cost"], 5.0)
        self.assertEqual(config["output"]["format"], "csv")

    def test_defaults_are_not_shared(self):
        first = self.parser.parse()
        first["model"]["alpha"] = 99.0
        self.assertEqual(self.parser.parse()["model"]["alpha"], 10.0)

    def test_yaml_merges_over_defaults(self):
        path = self._write("run.yaml", yaml.safe_dump({"model": {"phi": 1.0}, "oracle": {"x_points": 10}}))
        config = self.parser.parse(path)
        self.assertEqual(config["model"]["phi"], 1.0)
        self.assertEqual(config["model"]["theta"], 2.0)
        self.assertEqual(config["oracle"]["x_points"], 10)
        self.assertEqual(config["oracle"]["r_points"], 121)

    def test_json_file(self):
        path = self._write("run.json", json.dumps({"entry_cost": 2.5}))
        self.assertEqual(self.parser.parse(path)["entry_cost"], 2.5)

    def test_flat_record(self):
        record = {"alpha": 12.0, "beta": 2.0, "theta": 1.0, "phi": 0.25, "c": 1.0, "R": 3.0, "regime": "Deterred"}
        path = self._write("record.jsonl", json.dumps(record) + "\n")
        config = self.parser.parse(path)
        self.assertEqual(config["model"], {"alpha": 12.0, "beta": 2.0, "theta": 1.0, "phi": 0.25, "c": 1.0})
        self.assertEqual(config["entry_cost"], 3.0)
        self.assertNotIn("regime", config)

    def test_missing_file(self):
        with self.assertRaises(ConfigError):
            self.parser.parse(os.path.join(self.temp_dir, "missing.yaml"))

    def test_malformed_file(self):
        path = self._write("broken.json", "{not json")
        with self.assertRaises(ConfigError):
            self.parser.parse(path)

    def test_non_mapping(self):
        path = self._write("list.yaml", "- 1\n- 2\n")
        with self.assertRaises(ConfigError):
            self.parser.parse(path)


class TestValueRange(unittest.TestCase):
    """Test cases for ValueRange."""

    def test_parse_and_values(self):
        values = ValueRange.parse("0:6:0.5").values()
        self.assertEqual(len(values), 13)
        self.assertEqual(values[0], 0.0)
        self.assertEqual(values[-1], 6.0)

    def test_single_point(self):
        self.assertEqual(ValueRange.parse("2:2:1").values(), [2.0])

    def test_invalid_ranges(self):
        for text in ("6:0:0.5", "0:6:0", "0:6:-1", "0:6", "a:b:c"):
            with self.assertRaises(ValueError):
                ValueRange.parse(text)


class TestRunConfig(unittest.TestCase):
    """Test cases for RunConfig."""

    def setUp(self):
        """Set up test environment."""
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        """Clean up test environment."""
        shutil.rmtree(self.temp_dir)

    def test_defaults(self):
        config = RunConfig.from_sources()
        params = config.model_params()
        self.assertEqual((params.alpha, params.beta, params.theta, params.phi, params.c), (10.0, 2.0, 2.0, 0.5, 2.0))
        self.assertEqual(config.entry_costs(), [5.0])
        self.assertEqual(config.axis_points(), [(2.0, 0.5)])
        self.assertEqual(params.equality_tol, 1e-12)
        self.assertEqual(params.profit_tol, 1e-9)

    def test_flags_override_file(self):
        path = os.path.join(self.temp_dir, "run.yaml")
        with open(path, "w") as f:
            yaml.safe_dump({"model": {"phi": 1.0, "c": 1.0}, "entry_cost": 3.0}, f)
        config = RunConfig.from_sources(path, {"phi": 0.25, "entry_cost": None})
        self.assertEqual(config.phi, 0.25)
        self.assertEqual(config.c, 1.0)
        self.assertEqual(config.entry_cost, 3.0)

    def test_ranges(self):
        config = RunConfig.from_sources(overrides={"entry_cost_range": "0:1:0.25", "sweep_phi": "0:2:0.5"})
        self.assertEqual(config.entry_costs(), [0.0, 0.25, 0.5, 0.75, 1.0])
        self.assertEqual([phi for _, phi in config.axis_points()], [0.0, 0.5, 1.0, 1.5, 2.0])

    def test_theta_axis(self):
        config = RunConfig.from_sources(overrides={"sweep_theta": "1:3:1"})
        self.assertEqual(config.axis_points(), [(1.0, 0.5), (2.0, 0.5), (3.0, 0.5)])

    def test_single_sweep_axis(self):
        with self.assertRaises(ValidationError):
            RunConfig.from_sources(overrides={"sweep_theta": "1:3:1", "sweep_phi": "0:1:0.5"})

    def test_invalid_values(self):
        for overrides in (
            {"entry_cost": -1.0},
            {"entry_cost_range": "3:1:0.5"},
            {"entry_cost_range": "-1:1:0.5"},
            {"price_step": 0.0},
            {"output_format": "xml"},
        ):
            with self.assertRaises(ValidationError):
                RunConfig.from_sources(overrides=overrides)

    def test_grid_spec(self):
        config = RunConfig.from_sources(overrides={"price_step": 0.01})
        grid = config.grid_spec(config.model_params())
        self.assertEqual(grid.price_step, 0.01)
        self.assertAlmostEqual(grid.output_step, 5e-3, places=15)

    def test_figure_settings_from_file(self):
        path = os.path.join(self.temp_dir, "run.yaml")
        with open(path, "w") as f:
            yaml.safe_dump({"figure": {"x_max": 4.0, "samples": 9}}, f)
        config = RunConfig.from_sources(path)
        self.assertEqual(config.figure_x_max, 4.0)
        self.assertEqual(config.figure_samples, 9)


if __name__ == "__main__":
    unittest.main()
