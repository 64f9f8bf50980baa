import pytest

AGGREGATE = """\
# pczoom-aggregate-v1
t,pcz_mean_cum_regret,pcz_se,contextual-zooming_mean_cum_regret,contextual-zooming_se,random_mean_cum_regret,random_se
1,0.1,0.01,0.12,0.02,0.2,0.03
2,0.2,0.015,0.22,0.02,0.41,0.04
3,0.28,0.02,0.33,0.025,0.63,0.04
4,0.35,0.02,0.42,0.03,0.85,0.05
"""

AGGREGATE_SINGLE_RUN = """\
# pczoom-aggregate-v1
t,pcz_mean_cum_regret,pcz_se
1,0.1,0.0
2,0.2,0.0
3,0.28,0.0
"""

FAIRNESS = """\
# pczoom-fairness-v1
policy,bin1,bin2,bin3,bin4,bin5,bin6,pareto_selections
pcz,0.17,0.165,0.165,0.17,0.165,0.165,12000
contextual-zooming,0.4,0.25,0.15,0.1,0.06,0.04,15000
random,0.167,0.167,0.167,0.167,0.166,0.166,9000
"""


@pytest.fixture
def aggregate_csv(tmp_path):
    path = tmp_path / "aggregate.csv"
    path.write_text(AGGREGATE)
    return path


@pytest.fixture
def single_run_csv(tmp_path):
    path = tmp_path / "single.csv"
    path.write_text(AGGREGATE_SINGLE_RUN)
    return path


@pytest.fixture
def fairness_csv(tmp_path):
    path = tmp_path / "fairness.csv"
    path.write_text(FAIRNESS)
    return path
