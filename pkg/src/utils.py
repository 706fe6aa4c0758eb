"""
Contains utility classes for file and configuration handling.

This module includes:
- UtilsPath: For handling file system path operations like ensuring a path
  exists and writing text or CSV files.
- UtilsJson: For reading and writing JSON files safely and for merging
  configuration sections along a `base_id` chain.
"""


import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import commentjson as cjson
import pandas as pd

logger = logging.getLogger(__name__)


class UtilsPath:
    """Utility class for path operations."""

    @classmethod
    def ensure_path_exists(cls, path: Path, checkisDir=False) -> None:
        """Ensures that the given path exists, creating it if necessary."""
        if not path.exists():
            path.mkdir(parents=True, exist_ok=True)
        elif checkisDir and not path.is_dir():
            raise NotADirectoryError(
                f"Expected a directory at {path}, but found a file.")

    @classmethod
    def _write_file(
            cls,
            file_path: Path,
            data: Any,
            extension: Optional[str] = None) -> None:
        """
        A helper to safely write to a file.
        Creates parent directories if they don't exist.

        Args:
            file_path (Path): The path to the output file.
            data (Any): A list (one line per item), a dict (JSON) or text.
            extension (str, optional): Required suffix of `file_path`.
        """
        if extension and file_path.suffix != extension:
            raise ValueError(
                f"ValErr:: Output file {file_path} must have extension {extension}")
        try:
            cls.ensure_path_exists(file_path.parent, checkisDir=True)
            with open(file_path, "w", encoding='utf-8') as f_ptr:
                if isinstance(data, list):
                    f_ptr.write("\n".join(map(str, data)) + "\n")
                elif isinstance(data, dict):
                    cjson.dump(data, f_ptr, indent=4)
                else:
                    f_ptr.write(str(data))
            logger.info("Wrote %s", file_path)
        except TypeError as e:
            raise TypeError(
                f"Data is not serializable for the chosen format. Error: {e}") from e
        except OSError as e:
            raise OSError(
                f"Could not write to file at path: {file_path}. Error: {e}") from e

    @classmethod
    def write_text_file(cls, file_path: Path, data: Any) -> None:
        cls._write_file(file_path, data)

    @classmethod
    def write_csv_file(cls, file_path: Path, rows: List[Dict[str, Any]],
                       columns: Optional[List[str]] = None) -> None:
        """
        Writes rows of scalars as CSV with pandas.

        String cells holding JSON are quoted by the csv writer, so values such
        as `{"m": 3, "coeffs": [...]}` survive unchanged.
        """
        try:
            cls.ensure_path_exists(file_path.parent, checkisDir=True)
            pd.DataFrame(rows, columns=columns).to_csv(file_path, index=False)
            logger.info("Wrote %d rows to %s", len(rows), file_path)
        except OSError as e:
            raise OSError(
                f"Could not write to file at path: {file_path}. Error: {e}") from e


class UtilsJson:
    """Utility class for reading, writing, helper on JSON."""

    @classmethod
    def read_json_file(cls, file_path: Path) -> Dict[str, Any]:
        """A helper to safely load any individual JSON configuration file.

        Args:
            file_path (Path): Path of file to read. `//` comments are allowed.

        Raises:
            FileNotFoundError: If the file does not exist.
            ValueError: If the content is not valid JSON.

        Returns:
            Dict[str, Any]: The decoded document.
        """
        try:
            with open(file_path, "r", encoding='utf-8') as fle:
                return cjson.load(fle)
        except FileNotFoundError as ferr:
            raise FileNotFoundError(
                f"Configuration file not found: {file_path}") from ferr
        except OSError as oserr:
            raise OSError(
                f"Not able to read the file at path: {file_path}") from oserr
        except (json.JSONDecodeError, cjson.JSONLibraryException,
                cjson.ParserException) as jsonerr:
            raise ValueError(
                f"Error decoding JSON from file: {file_path}") from jsonerr

    @classmethod
    def write_json_file(cls, file_path: Path, data: Any) -> None:
        """
        A helper to safely write a JSON document.
        Creates parent directories if they don't exist.
        """
        try:
            UtilsPath.ensure_path_exists(file_path.parent, checkisDir=True)
            with open(file_path, "w", encoding='utf-8') as f:
                cjson.dump(data, f, indent=4)
                f.write("\n")
            logger.info("Wrote JSON data to %s", file_path)
        except TypeError as e:
            raise TypeError(
                f"Data is not JSON serializable. Error: {e}") from e
        except OSError as e:
            raise OSError(
                f"Could not write to file at path: {file_path}. Error: {e}") from e

    @classmethod
    def to_json_string(cls, data: Any) -> str:
        """Compact single-line JSON, e.g. for CSV cells."""
        return cjson.dumps(data, separators=(",", ":"))

    @classmethod
    def get_merged_section(
        cls, config_data: Dict[str, dict], derived_key_id: str,
        base_key_id: Optional[str] = None, base_key_identifier: Optional[str] = None,
    ) -> Dict[str, Any]:
        """
        Merges configuration sections, supporting direct base merge or an inheritance chain.

        The 'derived' section's values override the 'base' section's values.

        Args:
            config_data (Dict[str, dict]): The main dictionary containing all configuration sections.
            derived_key_id (str): The ID of the derived section to start with.
            base_key_id (str, optional): The ID of a specific base section to merge with.
                                          If provided, only this base section is merged.
            base_key_identifier (str, optional): The key within each section (e.g. 'base_id')
                                                  that points to its parent section ID. If provided,
                                                  the chain is traversed and every parent merged.

        Returns:
            Dict[str, Any]: The fully merged section.
        """
        if derived_key_id not in config_data:
            raise ValueError(
                f"ValErr:: Derived ID '{derived_key_id}' not found in the configuration.")

        derived_section = config_data[derived_key_id]

        if base_key_id:
            if base_key_id not in config_data:
                raise ValueError(
                    f"ValErr:: Base ID '{base_key_id}' not found in the configuration.")
            merged_section = dict(config_data[base_key_id])
            merged_section.update(derived_section)
            return merged_section

        if base_key_identifier:
            chain_ids = [derived_key_id]
            current_id = derived_key_id
            max_depth = 50
            while True:
                if len(chain_ids) > max_depth:
                    raise ValueError(
                        f"ValErr:: Inheritance chain exceeded max depth of {max_depth}.")
                parent_id = config_data[current_id].get(base_key_identifier)
                if parent_id is None:
                    break
                if parent_id in chain_ids:
                    raise ValueError(
                        f"ValErr:: Inheritance loop detected starting at '{derived_key_id}'. "
                        f"Chain: {chain_ids + [parent_id]}")
                if parent_id not in config_data:
                    raise ValueError(
                        f"ValErr:: Parent ID '{parent_id}' specified in '{current_id}' "
                        f"not found in the configuration.")
                chain_ids.append(parent_id)
                current_id = parent_id

            # shallow merge, base first
            merged_section: Dict[str, Any] = {}
            for key_id in reversed(chain_ids):
                merged_section.update(config_data[key_id])
            merged_section.pop(base_key_identifier, None)
            return merged_section

        return dict(derived_section)

