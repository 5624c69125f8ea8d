import sys
import os
import subprocess
from pathlib import Path

# The project root is the directory containing this script.
project_root = Path(__file__).resolve().parent

# Prefer a local venv Python if present; otherwise fall back to current interpreter
venv_python = project_root / '.venv' / 'bin' / 'python'
if not venv_python.exists():
    venv_python = Path(sys.executable)

# Prepare environment so that `src` is importable when running as a module
env = os.environ.copy()
env["PYTHONPATH"] = str(project_root) + (os.pathsep + env["PYTHONPATH"] if "PYTHONPATH" in env else "")

# Forward every argument to the CLI module; its JSON goes straight to stdout
cmd = [str(venv_python), "-m", "src.cli", *sys.argv[1:]]
try:
    completed = subprocess.run(cmd, cwd=str(project_root), env=env, shell=False)
    sys.exit(completed.returncode)
except FileNotFoundError:
    print(f"Error: Could not find the python executable at {venv_python}", file=sys.stderr)
    sys.exit(2)
