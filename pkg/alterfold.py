"""Launcher for the alterfold command-line tools."""

import argparse
import os
import sys
from pathlib import Path


def get_env_file_path(env_name):
    """Get the path to the environment file based on name."""
    if env_name == "default":
        return ".env"
    for candidate in (f"config/config.{env_name}.env", f".env.{env_name}"):
        if Path(candidate).exists():
            return candidate
    raise FileNotFoundError(f"Environment file not found for '{env_name}'")


if __name__ == "__main__":
    # --env must be applied before settings are imported
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--env", type=str, default=None)
    known, rest = pre.parse_known_args()

    if known.env:
        try:
            os.environ["ENV_FILE"] = get_env_file_path(known.env)
        except FileNotFoundError as e:
            print(f"alterfold: {e}", file=sys.stderr)
            sys.exit(2)

    from src.cli import run

    sys.exit(run(rest))
