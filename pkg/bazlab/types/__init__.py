from __future__ import annotations

from .psi_series import PsiSeries as PsiSeries
from .run_config import RunConfig as RunConfig
from .omega_spec import OmegaSpec as OmegaSpec
from .means_report import (
    GrowthFit as GrowthFit,
    MeansEntry as MeansEntry,
    MeansReport as MeansReport,
    WitnessEntry as WitnessEntry,
    WitnessReport as WitnessReport,
)
from .bound_report import (
    BoundRecord as BoundRecord,
    BoundReport as BoundReport,
    DominationReport as DominationReport,
)
from .sweep_report import (
    SweepReport as SweepReport,
    SweepArgmax as SweepArgmax,
    Counterexample as Counterexample,
)
from .bazilevic_spec import BazFunction as BazFunction, BazilevicSpec as BazilevicSpec
from .sampled_reports import StarlikeReport as StarlikeReport, PositivityReport as PositivityReport
from .janowski_params import JanowskiParams as JanowskiParams
from .herglotz_measure import Atom as Atom, HerglotzMeasure as HerglotzMeasure
from .correspondence_report import CorrespondenceReport as CorrespondenceReport
from .necessary_scan_report import RadiusScan as RadiusScan, NecessaryScanReport as NecessaryScanReport
from .bazilevic_spec_params import HParams as HParams, BazilevicSpecParams as BazilevicSpecParams
