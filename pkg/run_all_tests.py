#!/usr/bin/env python
"""Run the test suite in phases and keep a transcript of each phase"""
import re
import subprocess
import sys
import time

# (name, marker expression); the slow phase only runs with --slow
PHASES = [("fast", "not slow"), ("slow", "slow")]
TRANSCRIPT = "test_results_full.txt"


def summary_line(stdout: str) -> str:
    """pytest's closing '=== N passed, M failed in Xs ===' line, unwrapped"""
    for line in reversed(stdout.splitlines()):
        m = re.match(r"^=+ (.*) =+$", line.strip())
        if m and (" in " in m.group(1)):
            return m.group(1)
    return "no summary (pytest did not finish)"


def run_phase(name: str, marker: str):
    cmd = [sys.executable, "-m", "pytest", "tests/", "-m", marker, "-q", "--tb=short"]
    print(f"[{name}] {' '.join(cmd[2:])}")
    start = time.perf_counter()
    result = subprocess.run(cmd, capture_output=True, text=True, cwd=".")
    elapsed = time.perf_counter() - start
    # exit code 5 means the marker selected nothing
    code = 0 if result.returncode == 5 else result.returncode
    print(f"[{name}] {summary_line(result.stdout)} (exit {code}, {elapsed:.1f}s)")
    return code, result


def main(argv) -> int:
    phases = PHASES if "--slow" in argv else PHASES[:1]
    worst = 0
    with open(TRANSCRIPT, "w", encoding="utf-8") as f:
        for name, marker in phases:
            code, result = run_phase(name, marker)
            worst = worst or code
            f.write(f"## phase {name} (-m '{marker}'), exit {code}\n\n")
            f.write(result.stdout)
            if result.stderr:
                f.write("\nSTDERR:\n" + result.stderr)
            f.write("\n")
    print(f"Transcript written to {TRANSCRIPT}")
    return worst


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
