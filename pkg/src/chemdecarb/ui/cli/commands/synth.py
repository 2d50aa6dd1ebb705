"""Synth command implementation for the CLI."""

from __future__ import annotations

from typing import final

from chemdecarb.application.services.synth_service import SynthRequest, SynthResult, SynthService
from chemdecarb.ui.cli.args.options import SynthArgs
from chemdecarb.ui.cli.display.summary import SummaryDisplay


@final
class SynthCommand:
    """Command writing a synthetic asset table."""

    def __init__(self, args: SynthArgs) -> None:
        self.args = args
        self.service = SynthService()
        self.display = SummaryDisplay()

    def execute(self) -> SynthResult:
        request = SynthRequest(out_dir=self.args.out_dir, spec_path=self.args.spec_path, seed=self.args.seed)
        result = self.service.run(request)
        self.display.show_synth(result, quiet=self.args.quiet)
        return result
