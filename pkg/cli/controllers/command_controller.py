import json
import sys
from pathlib import Path
from typing import Optional, TextIO

from core.benchmark_service import BenchmarkService
from core.generation_service import GenerationService
from core.instance_io import dumps_instance, read_instance
from core.logger import get_logger
from core.metrics import to_python
from core.solve_service import SolveService
from core.verification_service import VerificationService

from ..constants import EXIT_OK, EXIT_VERIFY_FAILED

logger = get_logger()


class CommandController:
    """Runs one subcommand against the core services and writes its output."""

    def __init__(self, threads: Optional[int] = None, stdout: Optional[TextIO] = None):
        self.threads = threads
        self.stdout = stdout or sys.stdout

    def _emit(self, text: str, output: Optional[str] = None) -> None:
        if output:
            Path(output).write_text(text, encoding="utf-8", newline="\n")
        else:
            self.stdout.write(text)

    def solve(self, args) -> int:
        instance = read_instance(args.input)
        record = SolveService(self.threads).solve(
            instance,
            objective=args.objective,
            algo=args.algo,
            metric=args.metric,
            eps=args.eps,
            keep_eccentricities=args.eccentricities,
        )
        self._emit(record.to_json() + "\n", args.output)
        return EXIT_OK

    def gen(self, args) -> int:
        params = {
            "n": args.n, "m": args.m, "d": args.d, "mode": args.mode, "density": args.density,
            "p": args.p, "low": args.low, "high": args.high, "moves": args.moves, "flips": args.flips,
            "bits": args.bits, "facilities": args.facilities, "clients": args.clients,
            "metric": args.metric,
        }
        source = read_instance(args.input) if args.input else None
        instance = GenerationService(self.threads).generate(args.gadget, params, args.seed, source)
        self._emit(dumps_instance(instance), args.output)
        return EXIT_OK

    def verify(self, args) -> int:
        service = VerificationService(self.threads)
        passed = 0
        for path in args.inputs:
            report = service.verify(read_instance(path), args.objective, args.algo, args.metric, args.eps)
            passed += report.passed
            data = {"input": str(path), **report.to_dict()}
            self.stdout.write(json.dumps(data, sort_keys=True, default=to_python) + "\n")
        total = len(args.inputs)
        print(f"{passed}/{total} passed", file=sys.stderr)
        return EXIT_OK if passed == total else EXIT_VERIFY_FAILED

    def bench(self, args) -> int:
        service = BenchmarkService(self.threads, args.seed)
        if args.suite == "l1-scaling":
            rows = service.run(
                "l1-scaling",
                d=args.d or 8,
                sizes=args.sizes or (2 ** 14, 2 ** 15, 2 ** 16, 2 ** 17),
                reps=args.reps,
                brute_sizes=args.brute_sizes or (),
            )
        else:
            rows = service.run("ulam-pairs", n=args.n or 64, d=args.d or 256, reps=args.reps, moves=args.moves)

        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="") as f:
                service.write_csv(rows, f)
        else:
            service.write_csv(rows, self.stdout)
        for (n, d, algo), median in sorted(service.medians(rows).items()):
            print(f"median n={n} d={d} {algo}: {median:.6f}s", file=sys.stderr)
        return EXIT_OK
