from __future__ import annotations

import sys
from typing import Callable, Dict, Sequence

from grassmannian_mirror.core.constants import EXIT_INVALID_INPUT, EXIT_OK
from grassmannian_mirror.entrypoints import Branes, Chart, Flower, Potential, Verify

COMMAND_MAINS: Dict[str, Callable[[Sequence[str] | None], int]] = {
    "flower": Flower.main,
    "branes": Branes.main,
    "verify": Verify.main,
    "potential": Potential.main,
    "chart": Chart.main,
}

USAGE = (
    "usage: gr-mirror {" + ",".join(COMMAND_MAINS) + "} --k K --n N "
    "[--format text|json|svg] [--out PATH] [--jobs J] [--tol T] [--config YAML]"
)


def main(argv: Sequence[str] | None = None) -> int:
    args = list(sys.argv[1:] if argv is None else argv)
    if args and args[0] in {"-h", "--help"}:
        print(USAGE)
        return EXIT_OK
    if not args or args[0] not in COMMAND_MAINS:
        print(USAGE, file=sys.stderr)
        got = args[0] if args else None
        print(f"[FAIL] unknown command {got!r}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    return COMMAND_MAINS[args[0]](args[1:])


if __name__ == "__main__":
    sys.exit(main())
