import logging
from pathlib import Path
from typing import Any, Dict, List

from src.constant import (DEFAULT_PSI_SHIFT, DEFAULT_SAMPLE_SIZE, DEFAULT_SEED,
                          EXHAUSTIVE_THRESHOLD, VerifyMode)
from src.utils import UtilsJson

logger = logging.getLogger(__name__)


class ConfigManager:
    """
    ConfigManager resolves named verification profiles.

    Key Responsibilities:
    - Load the profile file (run_config.json) and the suite file (suites.json).
    - Resolve a profile's 'base_id' inheritance chain using UtilsJson.
    - Merge the profile's suite onto 'default_suite' and expose its identity ids.
    - Validate the result and fill in defaults.
    """

    def __init__(self, run_config_path: Path, suites_config_path: Path):
        self.run_config_path = run_config_path
        self.suites_config_path = suites_config_path

        self.run_configs = UtilsJson.read_json_file(self.run_config_path)
        self.suites_configs = UtilsJson.read_json_file(self.suites_config_path)

    def _get_merged_section(
        self, config_data: Dict[str, Any], section_id: str, default_key: str
    ) -> Dict[str, Any]:
        """
        Merges a section with its 'default' counterpart, without following
        any 'base_id' chain.
        """
        if default_key not in config_data:
            specific_section = config_data.get(section_id)
            if not specific_section:
                raise ValueError(
                    f"ValErr:: Section ID '{section_id}' not found in the configuration.")
            return dict(specific_section)

        return UtilsJson.get_merged_section(
            config_data=config_data,
            derived_key_id=section_id,
            base_key_id=default_key,
            base_key_identifier=None,
        )

    @staticmethod
    def _validate_fields(fields: Any) -> List[int]:
        if not isinstance(fields, list) or not fields:
            raise ValueError(
                "Configuration error: 'fields' must be a non-empty list of field orders.")
        out = []
        for q in fields:
            if isinstance(q, bool) or not isinstance(q, int) or q < 2:
                raise ValueError(
                    f"Configuration error: field order {q!r} is not an integer >= 2.")
            out.append(q)
        return out

    def _validate_and_setdefault(
            self, config: Dict[str, Any]) -> Dict[str, Any]:
        """
        Ensures all critical configuration parameters have values,
        providing defaults where absent.
        """
        if "fields" not in config:
            raise ValueError(
                "Configuration error: 'fields' is a required field.")
        if "suite_id" not in config and "ids" not in config:
            raise ValueError(
                "Configuration error: 'suite_id' is a required field.")
        config["fields"] = self._validate_fields(config["fields"])

        config.setdefault("mode", VerifyMode.EXHAUSTIVE.value)
        if config["mode"] not in {m.value for m in VerifyMode}:
            raise ValueError(
                f"Configuration error: unknown mode '{config['mode']}'.")
        config.setdefault("sample_size", DEFAULT_SAMPLE_SIZE)
        config.setdefault("seed", DEFAULT_SEED)
        config.setdefault("threads", 1)
        config.setdefault("exhaustive_threshold", EXHAUSTIVE_THRESHOLD)
        config.setdefault("psi_shift", DEFAULT_PSI_SHIFT)
        config.setdefault("output_dir", "output")
        return config

    def load_combined_config(self, profile_id: str) -> Dict[str, Any]:
        """
        Loads and merges the configuration of one verification profile.

        Args:
            profile_id (str): A key of run_config.json.

        Returns:
            Dict[str, Any]: Profile values with the suite's identity ids under
            'ids' (unless the profile lists its own) and defaults filled in.
        """
        run_config = UtilsJson.get_merged_section(
            config_data=self.run_configs,
            derived_key_id=profile_id,
            base_key_id=None,
            base_key_identifier="base_id",
        )
        logger.info("Loaded (and merged) profile '%s'.", profile_id)

        suite_id = run_config.get("suite_id")
        if suite_id is not None:
            suite = self._get_merged_section(self.suites_configs, suite_id, "default_suite")
            run_config.setdefault("ids", suite.get("ids", "all"))
            run_config.setdefault("description", suite.get("description", ""))

        final_config = self._validate_and_setdefault(run_config)
        final_config.setdefault("report_name", f"verify_{profile_id}.json")
        logger.info("Final configuration prepared for profile '%s'.", profile_id)
        return final_config
