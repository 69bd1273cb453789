import io
from contextlib import redirect_stderr, redirect_stdout

import pytest

from hexsieve.cli import main as cli_main


@pytest.fixture
def run_cli():
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr).

    Captures via redirect rather than capsys so the tests behave the
    same under ``pytest -s``.
    """

    def _run(*argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = cli_main(list(argv))
        return code, out.getvalue(), err.getvalue()

    return _run
