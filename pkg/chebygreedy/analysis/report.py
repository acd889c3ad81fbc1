from __future__ import annotations

from typing import Optional, Sequence

from chebygreedy.analysis.constants import ell1_incoherence_V, nikolskii_C1, unconditionality_U
from chebygreedy.analysis.incoherence import coherence, rip_delta
from chebygreedy.analysis.supports import AnalysisConfig
from chebygreedy.models.dictionaries import Dictionary
from chebygreedy.models.reports import PropertyReport
from chebygreedy.utils.log import get_logger


log = get_logger(__name__)


def analyze(
        dictionary: Dictionary,
        K:          Sequence[int] = (1, 2),
        D:          Optional[int] = None,
        r:          Sequence[float] = (0.5,),
        rip_orders: Optional[Sequence[int]] = None,
        config:     AnalysisConfig = AnalysisConfig()
) -> PropertyReport:
    """
    Compute every dictionary constant into a :class:`PropertyReport`.

    Parameters:
        dictionary (Dictionary):
            The dictionary to analyze.

        K (Sequence[int]):
            Sparsity levels.

        D (Optional[int]):
            Depth; the dictionary size when omitted.

        r (Sequence[float]):
            Exponents of the Nikol'skii and incoherence properties.

        rip_orders (Optional[Sequence[int]]):
            Orders of the restricted isometry constant; ``1..D`` capped at the
            largest ``K`` plus one when omitted. Skipped unless ``p = 2``.

        config (AnalysisConfig):
            Enumeration limits and seed.
    """
    D = dictionary.size if D is None else D
    report = PropertyReport(dictionary.descriptor, seed=config.seed)

    if dictionary.size >= 2:
        report.coherence = coherence(dictionary)

    if dictionary.space.is_hilbert:
        orders = rip_orders if rip_orders is not None else range(1, min(D, max(K) + 1) + 1)

        for s in orders:
            report.add_rip(s, *rip_delta(dictionary, s, config=config))

    for k in K:
        report.add_unconditionality(k, D, *unconditionality_U(dictionary, k, D, config=config))

        for exponent in r:
            report.add_nikolskii(k, exponent, *nikolskii_C1(dictionary, k, exponent, config=config))
            report.add_ell1_incoherence(k, D, exponent, *ell1_incoherence_V(dictionary, k, D, exponent, config=config))

    log.info('Analyzed %r: %s', dictionary, report)

    return report
