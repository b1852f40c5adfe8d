import pytest

from chessprobe.datagen import SplitSpec, build_probes, filter_and_dedupe, make_splits

from helpers import selfplay_corpus

# sizes for the session corpus: small enough to build in seconds, large
# enough to supply a 1000-pair probe set
_CORPUS_SEED = 4242
_CORPUS_GAMES = 700
_SPLIT_SIZES = {"train-s": 60, "train-m": 120, "train-l": 260,
                "dev": 30, "test": 30, "probe-pool": 300}

acceptance_results: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def session_corpus():
    return filter_and_dedupe(selfplay_corpus(_CORPUS_SEED, _CORPUS_GAMES))


@pytest.fixture(scope="session")
def session_splits(session_corpus):
    return make_splits(session_corpus, SplitSpec(seed=11, sizes=dict(_SPLIT_SIZES)))


@pytest.fixture(scope="session")
def session_probes(session_splits):
    return build_probes(
        session_splits["probe-pool"], session_splits["train-l"],
        n=1000, seed=97,
    )


def pytest_terminal_summary(terminalreporter):
    if not acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in acceptance_results:
        status = "PASS" if ok else "FAIL"
        line = f"{status}  {name}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
