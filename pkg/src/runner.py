import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from src.config_manager import ConfigManager
from src.constant import THREADS_ENV_VAR
from src.gf import field_from_q
from src.utils import UtilsJson, UtilsPath
from src.verify import VerificationReport, verify_suite

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ["identity", "q", "mode", "tuples_enumerated", "tuples_checked",
                   "lambdas_per_tuple", "failures", "passed", "reason"]


def load_configuration(config_path: Path, profile_id: str) -> dict:
    """
    Loads the configuration for a verification profile.

    Args:
        config_path (Path): Directory holding run_config.json and suites.json.
        profile_id (str): The profile to load.

    Returns:
        dict: The merged profile.
    """
    try:
        config_manager = ConfigManager(
            run_config_path=config_path / "run_config.json",
            suites_config_path=config_path / "suites.json",
        )
        return config_manager.load_combined_config(profile_id)
    except (FileNotFoundError, ValueError) as e:
        logger.error("Error loading configuration: %s", e)
        raise
    except KeyError as e:
        logger.error("Missing key in configuration: %s", e)
        raise


def resolve_threads(flag: Optional[int], config: Optional[Dict[str, Any]] = None) -> int:
    """Worker count: the flag, then the environment, then the profile, then 1."""
    if flag is not None:
        return max(1, flag)
    env = os.environ.get(THREADS_ENV_VAR)
    if env:
        try:
            return max(1, int(env))
        except ValueError as e:
            raise ValueError(
                f"ValErr:: {THREADS_ENV_VAR}={env!r} is not an integer.") from e
    if config and config.get("threads"):
        return max(1, int(config["threads"]))
    return 1


def run_profile(config: Dict[str, Any], threads: int = 1) -> List[VerificationReport]:
    """Runs verify_suite over the profile's fields and identities."""
    fields = [field_from_q(q) for q in config["fields"]]
    logger.info("Verifying %s over q in %s (%s, %d workers)",
                config.get("ids", "all"), config["fields"], config["mode"], threads)
    return verify_suite(
        fields,
        config.get("ids", "all"),
        mode=config["mode"],
        sample_size=config["sample_size"],
        seed=config["seed"],
        threads=threads,
        threshold=config["exhaustive_threshold"],
        psi_shift=config["psi_shift"],
    )


def write_report(reports: List[VerificationReport], file_path: Path, timing: bool = False) -> None:
    UtilsJson.write_json_file(file_path, [report.to_dict(timing) for report in reports])


def summary_frame(reports: List[VerificationReport]) -> pd.DataFrame:
    """One row per (identity, field)."""
    rows = [{
        "identity": report.identity,
        "q": report.field["q"],
        "mode": report.mode,
        "tuples_enumerated": report.tuples_enumerated,
        "tuples_checked": report.tuples_checked,
        "lambdas_per_tuple": report.lambdas_per_tuple,
        "failures": len(report.failures),
        "passed": report.passed,
        "reason": report.reason or "",
    } for report in reports]
    return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)


def write_summary_csv(reports: List[VerificationReport], file_path: Path) -> None:
    frame = summary_frame(reports)
    UtilsPath.write_csv_file(file_path, frame.to_dict("records"), SUMMARY_COLUMNS)
