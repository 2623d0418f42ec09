"""Run the peeling sweep through Dagster with a stable home directory.

Usage:
  python run_pipeline.py                             # materialize every asset
  python run_pipeline.py --ui                        # start the Dagster UI
  python run_pipeline.py --ui --materialize          # materialize, then start the UI
  python run_pipeline.py --asset bronze_grid_layers  # materialize one step
"""

import argparse
import os
import pathlib
import subprocess
import sys

from src.core import settings

DEFINITIONS_MODULE = "src.orchestration.definitions"
ASSET_PREFIX = "run_"


def project_root() -> pathlib.Path:
    """Nearest directory above this script that holds pyproject.toml."""
    here = pathlib.Path(__file__).resolve().parent
    for directory in (here, *here.parents):
        if (directory / "pyproject.toml").is_file():
            return directory
    raise FileNotFoundError(f"No pyproject.toml above {here}")


def dagster_env(root: pathlib.Path) -> dict[str, str]:
    """Process environment with DAGSTER_HOME pinned and the project importable."""
    home = root / settings.DAGSTER_HOME
    home.mkdir(parents=True, exist_ok=True)
    paths = [str(root)]
    if os.environ.get("PYTHONPATH"):
        paths.append(os.environ["PYTHONPATH"])
    return {
        **os.environ,
        "DAGSTER_HOME": str(home),
        "PYTHONPATH": os.pathsep.join(paths),
    }


def materialize(root: pathlib.Path, env: dict[str, str], selection: str = "*") -> bool:
    print(f"Materializing {selection} ...")
    status = subprocess.call(
        ["dagster", "asset", "materialize", "-m", DEFINITIONS_MODULE, "--select", selection],
        cwd=root,
        env=env,
    )
    if status != 0:
        print(f"Materialization failed for {selection} (exit {status})")
        return False
    print("Materialization finished")
    return True


def launch_ui(root: pathlib.Path, env: dict[str, str]) -> None:
    print("Starting Dagster on http://127.0.0.1:3000 (Ctrl+C to stop)")
    try:
        subprocess.call(["dagster", "dev", "-m", DEFINITIONS_MODULE], cwd=root, env=env)
    except KeyboardInterrupt:
        print("\nDagster stopped.")


def main() -> None:
    parser = argparse.ArgumentParser(
        description="Materialize the peeling sweep or open the Dagster UI",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    parser.add_argument("--ui", action="store_true", help="Start the Dagster UI")
    parser.add_argument(
        "--materialize", action="store_true", help="Materialize all assets before --ui"
    )
    parser.add_argument(
        "--asset",
        action="append",
        metavar="STEP",
        help="Materialize one pipeline step, e.g. silver_trace_summaries",
    )
    args = parser.parse_args()
    if args.asset and args.materialize:
        parser.error("--asset and --materialize are mutually exclusive")

    root = project_root()
    env = dagster_env(root)

    selection = None
    if args.asset:
        selection = ",".join(ASSET_PREFIX + step for step in args.asset)
    elif args.materialize or not args.ui:
        selection = "*"

    if selection is not None and not materialize(root, env, selection) and not args.ui:
        sys.exit(1)
    if args.ui:
        launch_ui(root, env)


if __name__ == "__main__":
    main()
