import pytest

from tropquartic.corpus import CorpusEntry, read_corpus, write_corpus
from tropquartic.triangulation import staircase


def test_corpus_round_trip(tmp_path):
    entries = [
        CorpusEntry(orbit=0, size=6, regular=True, c_generic=True,
                    triangulation=staircase()),
        CorpusEntry(orbit=1, size=3, regular=True, c_generic=False,
                    triangulation=staircase()),
    ]
    p = tmp_path / "corpus.txt"
    write_corpus(entries, p)
    assert read_corpus(p) == entries


def test_corpus_rejects_malformed_header(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("# orbit 0 size 6\n0,0 1,0 0,1\n")
    with pytest.raises(ValueError):
        read_corpus(p)
