from dataclasses import dataclass
from statistics import fmean


@dataclass(frozen=True)
class Scores:
    precision: float
    recall: float
    f: float

    def as_dict(self) -> dict[str, float]:
        return {'precision': self.precision, 'recall': self.recall, 'f': self.f}


def f_measure(precision: float, recall: float) -> float:
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def set_scores(returned: set[str] | frozenset[str], gold: set[str] | frozenset[str]) -> Scores:
    """
    Set precision and recall of one answer

    An empty gold set marks an unanswerable question: returning nothing is a perfect score.
    """
    if not gold:
        return Scores(1.0, 1.0, 1.0) if not returned else Scores(0.0, 0.0, 0.0)
    if not returned:
        return Scores(0.0, 0.0, 0.0)
    hits = len(set(returned) & set(gold))
    precision = hits / len(returned)
    recall = hits / len(gold)
    return Scores(precision, recall, f_measure(precision, recall))


def macro_average(scores: list[Scores]) -> Scores:
    # each of P, R and F is averaged over questions on its own
    if not scores:
        return Scores(0.0, 0.0, 0.0)
    return Scores(
        fmean(score.precision for score in scores),
        fmean(score.recall for score in scores),
        fmean(score.f for score in scores),
    )
