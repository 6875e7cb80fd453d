"""Byte-for-byte comparison of CLI output against checked-in golden files.

The emitter promises identical bytes for identical input; these files pin
that promise (and the quartic numbers) across refactors.  Regenerate only
after verifying a deliberate output change:

    python3 -m lgmirror.cli astate tests/golden/quartic.lg > tests/golden/quartic_astate.txt
"""

import io
import contextlib
from pathlib import Path

import pytest

from lgmirror import cli

GOLDEN = Path(__file__).parent / "golden"


def capture(*argv) -> str:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(list(argv))
    assert code == 0
    return buf.getvalue()


@pytest.mark.parametrize("name,argv", [
    ("quartic_astate.txt", ("astate",)),
    ("quartic_mirror_check.json", ("mirror-check", "--json")),
    ("quartic_hodge.txt", ("hodge",)),
])
def test_golden_output(name, argv):
    spec = str(GOLDEN / "quartic.lg")
    expected = (GOLDEN / name).read_text()
    command, *flags = argv
    assert capture(command, spec, *flags) == expected
