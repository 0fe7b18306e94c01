"""Access to the reference arrays and codes shipped with the package.

Fixtures are named by their parameters: moa<M>_<s>_t<t>.moa for arrays,
code<n>_<k>.code for codes, with an irmoa prefix for the irredundant one.
"""

from __future__ import annotations

from pathlib import Path

FIXTURES_DIR = Path(__file__).parent / "fixtures"

ARRAY_FIXTURES = (
    "moa8_5_t2.moa",
    "moa8_3_t2.moa",
    "moa16_3_t2.moa",
    "moa16_4_t3.moa",
    "irmoa16_6_t2.moa",
)
CODE_FIXTURES = ("code10_4.code",)


def fixtures_dir() -> Path:
    return FIXTURES_DIR


def fixture_path(name: str, base: Path | str | None = None) -> Path:
    root = Path(base) if base is not None else FIXTURES_DIR
    p = root / name
    if not p.is_file():
        raise FileNotFoundError(f"no fixture {name!r} under {root}")
    return p
