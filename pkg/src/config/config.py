import os

import yaml

from src.core.config import settings
from src.core.enums import ReportFormat, ShellCoefficient
from src.core.exceptions import InputError


class Config:
    """Reads the analysis config file and returns the config variables."""

    def __init__(self, name: str = "config.yaml"):
        self.config = self.read_config(name) or {}

        analysis = self.config.get("analysis", {})
        try:
            self.shell_coefficient = ShellCoefficient(analysis.get("shell_coefficient", "intersection"))
            self.report_format = ReportFormat(analysis.get("report_format", "json"))
        except ValueError as e:
            raise InputError(f"Invalid analysis config {name}: {e}")
        self.max_expanded_digits = int(analysis.get("max_expanded_digits", 60))

        scan = self.config.get("scan", {})
        self.lmin = int(scan.get("lmin", 1))
        self.lmax = int(scan.get("lmax", 8))

        self.lemma1_max_power = int(self.config.get("properties", {}).get("lemma1_max_power", 4))

    def read_config(self, config_file_path):
        """Reads a YAML config file and returns the configuration."""
        config_path = os.path.join(settings.CONFIG_DIR, config_file_path)
        if not os.path.isfile(config_path):
            raise InputError(f"Configuration file {config_path} does not exist.")
        with open(config_path, encoding="utf-8") as stream:
            config = yaml.safe_load(stream)
        return config
