import configparser
import re
from pathlib import Path

import pytest

import src
from src import cli
from src.utils import __version__

ROOT = Path(__file__).resolve().parents[1]


def test_version_matches_package_metadata():
    cfg = configparser.ConfigParser()
    cfg.read(ROOT / "setup.cfg", encoding="utf-8")
    assert cfg["metadata"]["version"] == __version__
    setup_text = (ROOT / "setup.py").read_text(encoding="utf-8")
    assert f'version="{__version__}"' in setup_text


def test_console_script_points_at_cli_main():
    setup_text = (ROOT / "setup.py").read_text(encoding="utf-8")
    target = re.search(r'"mjuggle = ([\w.]+):(\w+)"', setup_text)
    assert target is not None
    assert target.groups() == ("src.cli", "main")
    assert callable(cli.main)


def test_module_entry_point_runs_cli_main():
    main_text = (Path(src.__file__).parent / "__main__.py").read_text(encoding="utf-8")
    assert "from src.cli import main" in main_text
    assert "sys.exit(main())" in main_text


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exit_:
        cli.main(["--version"])
    assert exit_.value.code == 0
    assert capsys.readouterr().out.strip() == __version__
