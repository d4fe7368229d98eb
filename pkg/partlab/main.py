import logging
import sys

import click
from pydantic import ValidationError

from partlab.arith.command import analyze
from partlab.counting.command import count, table
from partlab.explore.command import explore
from partlab.infra import settings
from partlab.setspec.command import sparse
from partlab.util.exceptions import DomainException
from partlab.verify.command import verify

# Set up logging
logging.basicConfig(level=settings.LOG_LEVEL)
logger = logging.getLogger(__name__)


def _validation_details(exc: ValidationError) -> str:
    """Turn pydantic's field errors into one readable line."""
    details = []
    for error in exc.errors():
        field_name = ".".join(str(loc) for loc in error["loc"])
        details.append(f"{field_name}: {error['msg']}")
    return "; ".join(details).lower()


class PartlabGroup(click.Group):
    """Command group whose main() is the single place errors become exit codes.

    0 success, 1 usage or input error, 2 set semantics, 3 suite failure.
    """

    def main(self, args=None, prog_name=None, **extra):
        extra["standalone_mode"] = False
        try:
            returned = super().main(args=args, prog_name=prog_name, **extra)
            code = returned if isinstance(returned, int) else 0
        except click.exceptions.Abort:
            code = 1
        except click.ClickException as exc:
            exc.show()
            code = 1
        except ValidationError as exc:
            logger.warning(f"Invalid options: {_validation_details(exc)}")
            code = 1
        except DomainException as exc:
            logger.warning(f"{type(exc).__name__}: {exc.error()}")
            code = exc.exit_code
        except Exception as exc:
            logger.error(f"Unhandled exception: {exc}", exc_info=True)
            code = 1
        sys.exit(code)


@click.group(cls=PartlabGroup)
@click.version_option(package_name="partlab")
def cli() -> None:
    """Exact partition counts with restricted parts and multiplicities."""


cli.add_command(count)
cli.add_command(table)
cli.add_command(analyze)
cli.add_command(verify)
cli.add_command(explore)
cli.add_command(sparse)


def run() -> None:
    cli.main(prog_name="partlab")


if __name__ == "__main__":
    run()
