import pytest

import lpsem

DEADALIVE = "dead :- not alive. alive :- not alive*. alive* :- not alive."
MIXED = "unhappy :- not wife_faithful. happy :- not unhappy."


def test_atoms_sorted():
    assert lpsem.atoms("q. p :- q.") == ["p", "q"]


def test_stable_models():
    assert lpsem.stable("p :- not q.") == [["p"]]
    assert lpsem.stable(DEADALIVE) == [["alive"], ["alive*", "dead"]]
    assert lpsem.stable("p :- not p.") == []


def test_least_model():
    assert lpsem.least("p. q :- p.") == ["p", "q"]


def test_well_founded_all_undefined():
    assert lpsem.well_founded(DEADALIVE) == {
        "true": [],
        "false": [],
        "undefined": ["alive", "alive*", "dead"],
    }


def test_partial_stable_count():
    assert len(lpsem.partial_stable(DEADALIVE)) == 3


def test_embeddings():
    assert lpsem.embed_ael("p :- not q.") == "p <- ~K q\n"
    assert lpsem.embed_dl("p :- not q.") == ": ~q / p\n"


def test_expansions():
    (e,) = lpsem.expansions("p :- not q.")
    assert e["believed"] == ["p"]
    assert e["worlds"] == [["p"], ["p", "q"]]


def test_extensions_match_stable():
    assert lpsem.extensions(DEADALIVE) == lpsem.stable(DEADALIVE)


def test_diagnose_flags():
    report = lpsem.diagnose(MIXED)
    assert report["stable_models"] == [["unhappy"]]
    assert [f["atom"] for f in report["flags"]] == ["happy", "wife_faithful"]
    assert report["statuses"]["happy"] == {
        "possible_state": "false-in-all",
        "belief": "unknown",
    }


def test_errors():
    with pytest.raises(lpsem.ParseError):
        lpsem.stable("p :- .")
    with pytest.raises(lpsem.SafetyError):
        lpsem.stable("p(X).")
    with pytest.raises(lpsem.PreconditionError):
        lpsem.least("p :- not q.")
    with pytest.raises(lpsem.CapError):
        lpsem.stable(DEADALIVE, max_atoms=2)
    assert issubclass(lpsem.NotDefiniteError, lpsem.PreconditionError)
    assert issubclass(lpsem.ParseError, lpsem.Error)
