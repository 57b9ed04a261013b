"""Python front end for the certificate toolkit core."""

from _loccdetect import *  # noqa: F401,F403
from _loccdetect import (
    Verdict,
    check_orthogonality,
    gamma_d_set,
    lemma_verdict,
)

__version__ = "0.1.0"


def certify(set_or_dim):
    """Run the kernel criterion on a set (or on gamma_d for an int dimension).

    Returns True when the set is certified locally indistinguishable.
    """
    mes = gamma_d_set(set_or_dim) if isinstance(set_or_dim, int) else set_or_dim
    if not check_orthogonality(mes).orthogonal:
        raise ValueError("set members are not pairwise orthogonal")
    report = lemma_verdict(mes)
    return report.verdict == Verdict.CertifiedLoccIndistinguishable
