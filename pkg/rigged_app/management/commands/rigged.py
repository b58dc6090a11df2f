"""rigged - compute with rigged configurations from an instance file."""

import logging

import msgspec
from django.core.management.base import BaseCommand, CommandError

from rigged_app.exceptions import CheckFailed, MalformedGraphError, PromotionError, ResourceLimitExceeded
from rigged_app.handlers import HANDLERS, Flags
from rigged_app.services import InstanceService

logger = logging.getLogger(__name__)

CHECK_FAILED = 1
INPUT_ERROR = 2


class Command(BaseCommand):
    help = "Run a rigged configuration computation on a JSON instance file."

    def add_arguments(self, parser):
        parser.add_argument("action", choices=sorted(HANDLERS))
        parser.add_argument("instance", help="path to the instance JSON file")
        parser.add_argument("--json", action="store_true", help="print the result document as JSON")
        parser.add_argument("--vacancies", action="store_true", help="show vacancy numbers left of each part")
        parser.add_argument("--dot", action="store_true", help="graph: emit DOT instead of JSON")
        parser.add_argument("--both", action="store_true", help="fermionic: also sum over RC(L) and compare")
        parser.add_argument("--literal", action="store_true", help="fermionic: walk every subset of A(λ′)")
        parser.add_argument("--max-vertices", type=int, default=None, help="override the closure vertex cap")

    def handle(self, *args, **options):
        action = options["action"]
        handler = HANDLERS[action]
        flags = Flags(
            vacancies=options["vacancies"],
            dot=options["dot"],
            both=options["both"],
            literal=options["literal"],
        )
        logger.debug(f"dispatching {action} on {options['instance']}")

        try:
            spec = InstanceService.load(options["instance"])
            instance = InstanceService.resolve(spec, options["max_vertices"])
            outcome = handler(instance, flags)
            if options["json"]:
                self.stdout.write(msgspec.json.encode(outcome.document).decode())
            else:
                self.stdout.write(outcome.text)
            if not outcome.passed:
                raise CheckFailed(f"{action}: check failed", witness=outcome.document)
        except CheckFailed as e:
            raise CommandError(str(e), returncode=CHECK_FAILED) from e
        except (msgspec.DecodeError, msgspec.ValidationError) as e:
            raise CommandError(f"malformed instance: {e}", returncode=INPUT_ERROR) from e
        except (ValueError, LookupError, OSError, MalformedGraphError, ResourceLimitExceeded) as e:
            raise CommandError(str(e), returncode=INPUT_ERROR) from e
        except PromotionError as e:
            logger.exception(f"promotion failed on {options['instance']}: {e}")
            raise CommandError(str(e), returncode=CHECK_FAILED) from e
