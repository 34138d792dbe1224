from geoqa.eval.baseline import OntologyBaseline
from geoqa.eval.metrics import Scores, f_measure, macro_average, set_scores
from geoqa.eval.report import compare_methods, disagreements, render_table
from geoqa.eval.runner import METHOD1, METHOD2, EvalReport, QuestionResult, run_method1, run_method2, run_suite
from geoqa.eval.suite import GoldRecord, load_suite, parse_suite
