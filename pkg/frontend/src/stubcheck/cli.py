"""check-stubs: validate generated stub files against goldens."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .checker import check_stubs


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="check-stubs",
        description="Parse, type-check, and golden-diff generated stub files.",
    )
    parser.add_argument("stub_dir", type=Path, help="directory of generated .pyi files")
    parser.add_argument("golden_dir", type=Path, help="directory of golden .pyi files")
    args = parser.parse_args(argv)

    if not args.stub_dir.is_dir():
        print(f"error: stub directory not found: {args.stub_dir}", file=sys.stderr)
        return 1

    results = check_stubs(args.stub_dir, args.golden_dir)
    if not results:
        print(f"error: no stub files in {args.stub_dir}", file=sys.stderr)
        return 1

    failed = 0
    for result in results:
        flags = (f"parse={'ok' if result.parse_ok else 'FAIL'} "
                 f"typecheck={'ok' if result.typecheck_ok else 'FAIL'} "
                 f"golden={'ok' if result.golden_match else 'FAIL'}")
        status = "PASS" if result.passed else "FAIL"
        print(f"{status} {result.file.name}: {flags}")
        for message in result.messages:
            print(f"  {message}")
        failed += not result.passed
    print(f"{len(results) - failed}/{len(results)} stub files pass")
    return 0 if failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
