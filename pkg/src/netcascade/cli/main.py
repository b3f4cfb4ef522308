"""Main CLI entry point."""

import logging
import sys
from collections.abc import Sequence

from pydantic import ValidationError

from netcascade.cli.args import parse_args
from netcascade.cli.run_config import build_run_config, format_validation_error
from netcascade.cli.runner import execute
from netcascade.config import settings
from netcascade.errors import DomainError, NumericalError

logger = logging.getLogger(__name__)


def _configure_logging(verbose: bool, quiet: bool) -> None:
    """Configure logging based on verbosity flags.

    Args:
        verbose: Enable verbose logging
        quiet: Suppress all non-error messages
    """
    if quiet:
        level = logging.ERROR
    elif verbose:
        level = logging.DEBUG
    else:
        level = settings.logging_level_int

    logging.basicConfig(
        level=level,
        format=settings.log_format if verbose else "%(levelname)s: %(message)s",
        datefmt=settings.log_date_format,
        stream=sys.stderr,
        force=True,
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Main CLI entry point.

    Args:
        argv: Argument list; defaults to sys.argv[1:]

    Returns:
        Exit code (0 success, 1 usage or validation error, 2 numerical failure)
    """
    try:
        args = parse_args(argv)
    except SystemExit as error:
        return 0 if error.code in (0, None) else 1

    _configure_logging(args.verbose, args.quiet)

    try:
        config = build_run_config(args)
        output = execute(config)

        if config.output is not None:
            try:
                output_path = config.output.expanduser()
                output_path.parent.mkdir(parents=True, exist_ok=True)
                output_path.write_text(output.csv, encoding="utf-8")
                logger.info(f"Output written to {output_path}")
            except OSError as error:
                logger.error(f"Failed to write output file: {error}")
                return 1
        else:
            sys.stdout.write(output.csv)

        print(output.summary, file=sys.stderr)
        return 0

    except ValidationError as error:
        logger.error(f"Invalid input: {format_validation_error(error)}")
        return 1
    except NumericalError as error:
        logger.error(f"Numerical failure: {error}")
        return 2
    except DomainError as error:
        logger.error(f"Invalid input: {error}")
        return 1
    except FileNotFoundError as error:
        logger.error(f"File not found: {error}")
        return 1
    except ValueError as error:
        logger.error(f"Invalid input: {error}")
        return 1
    except KeyboardInterrupt:
        logger.info("\nInterrupted by user")
        return 130
    except Exception as error:
        logger.exception(f"Unexpected error: {error}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
