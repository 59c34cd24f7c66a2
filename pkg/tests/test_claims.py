import pytest

from gammalab.claims import (CATALOG, DOUBTED, EXPLORATORY, FAILS, HOLDS,
                             PROVED_IDS, REFUTED_PROOF, UnknownClaim,
                             check_all, check_claim, search_counterexamples,
                             search_threads)
from gammalab.core import GROUPOID, KindError, PoGammaStructure
from gammalab.enumerate import BoundsError, EnumConfig, relabel

from conftest import left_zero, minimum_chain


def test_catalog_shape():
    assert list(CATALOG) == [f"C{i}" for i in range(1, 14)]
    kinds = {cid: c.statement_kind for cid, c in CATALOG.items()}
    assert PROVED_IDS == ("C1", "C2", "C5", "C6", "C7", "C8", "C9", "C10")
    assert kinds["C3"] == kinds["C4"] == DOUBTED
    assert kinds["C11"] == kinds["C12"] == REFUTED_PROOF
    assert kinds["C13"] == EXPLORATORY


def test_examples(chain3, lz2):
    v = check_claim("C5", chain3)
    assert v.status == HOLDS and v.witness is None and not v.vacuous
    v = check_claim("C7", lz2)
    assert v.holds and v.vacuous
    assert check_claim("C4", chain3).holds


def test_unknown_and_kind_mismatch(chain2):
    with pytest.raises(UnknownClaim):
        check_claim("C99", chain2)
    assert check_claim("c1", chain2).claim_id == "C1"
    gr = PoGammaStructure(2, 1, bytes([0, 1, 1, 0]), bytes([1, 0, 0, 1]), GROUPOID)
    with pytest.raises(KindError):
        check_claim("C1", gr)
    assert [v.claim_id for v in check_all(gr)] == ["C5", "C9"]
    assert len(check_all(chain2)) == 13


def test_refuted_proof_counterexample():
    # 2-chain with min and the reversed order: a semilattice whose N is one class
    s = PoGammaStructure.from_tables([[[0, 0], [0, 1]]], [[1, 0], [1, 1]])
    v = check_claim("C12", s)
    assert v.status == FAILS and v.witness.elements == (0, 1)
    assert v.witness.partition.k == 1


def test_proved_claims_hold_everywhere(mixed_corpus):
    for s in mixed_corpus:
        for cid in PROVED_IDS:
            v = check_claim(cid, s)
            assert v.holds, (cid, s, v)
            assert (v.witness is None) == (v.status == HOLDS)


def test_verdict_invariant_under_relabeling(small_corpus, rng):
    for s in small_corpus[::3]:
        pi = list(range(s.n))
        tau = list(range(s.g))
        rng.shuffle(pi)
        rng.shuffle(tau)
        t = relabel(s, pi, tau)
        for cid in CATALOG:
            a, b = check_claim(cid, s), check_claim(cid, t)
            assert (a.status, a.vacuous) == (b.status, b.vacuous), cid


def test_search_proved_examples():
    for cid in ("C1", "C9"):
        rep = search_counterexamples(cid, EnumConfig(3, 2))
        assert rep.structures_checked == 572 and rep.counterexamples == [] and rep.failures == 0


def test_search_deterministic_and_minimal():
    a = search_counterexamples("C11", EnumConfig(3, 2), limit=3)
    b = search_counterexamples("C11", EnumConfig(3, 2), limit=3, threads=2)
    assert a.counterexamples == b.counterexamples
    assert (a.failures, a.vacuous) == (b.failures, b.vacuous)
    assert len(a.counterexamples) == 3 and a.truncated
    # the first witness is the first failing structure in stream order
    from gammalab.enumerate import corpus
    first = next(s for s in corpus(3, 2) if not check_claim("C11", s).holds)
    assert a.counterexamples[0].structure == first


def test_search_random_mode_and_bounds():
    rep = search_counterexamples("C2", EnumConfig(4, 2), samples=20, seed=1)
    assert rep.mode == "random" and rep.structures_checked == 20 and rep.failures == 0
    with pytest.raises(BoundsError):
        search_counterexamples("C1", EnumConfig(5, 1))


def test_search_exact_shape():
    rep = search_counterexamples("C6", EnumConfig(2, 1), cumulative=False)
    assert rep.structures_checked == 11


def test_search_threads_env(monkeypatch):
    monkeypatch.setenv("GAMMA_LAB_THREADS", "3")
    assert search_threads() == 3
    monkeypatch.setenv("GAMMA_LAB_THREADS", "x")
    with pytest.raises(ValueError):
        search_threads()


def test_c13_on_chain_and_left_zero():
    assert check_claim("C13", minimum_chain(3)).holds
    assert check_claim("C13", left_zero(2)).holds
