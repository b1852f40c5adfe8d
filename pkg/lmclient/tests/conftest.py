import pytest

# the toolkit's frozen vocabulary layout: 64 squares file-major, piece types,
# promoted-pawn types, specials
VOCAB_TOKENS = (
    [f + r for f in "abcdefgh" for r in "12345678"]
    + list("PNBRQK") + list("qrbn") + ["BOS", "EOS", "PAD"]
)

PROBE_LINES = [
    "aaaaaaaaaaaaaaaa:6:end-actual\tend-actual\te2 e4 e7 e5 g1 f3 b8 c6 d2 d4 h7 h6\tf1\tb5\ta6,b5,c4,d3,e2",
    "aaaaaaaaaaaaaaaa:6:end-other\tend-other\te2 e4 e7 e5 g1 f3 b8 c6 d2 d4 h7 h6\tf3\t-\td2,e5,g1,g5,h4",
    "aaaaaaaaaaaaaaaa:6:start-actual\tstart-actual\te2 e4 e7 e5 g1 f3 b8 c6 d2 d4 h7 h6\tB\tf1\tc1,f1",
    "aaaaaaaaaaaaaaaa:6:start-other\tstart-other\te2 e4 e7 e5 g1 f3 b8 c6 d2 d4 h7 h6\tN\t-\tb1,f3",
]


@pytest.fixture()
def vocab_file(tmp_path):
    path = tmp_path / "vocab.txt"
    path.write_bytes(("\n".join(VOCAB_TOKENS) + "\n").encode("utf-8"))
    return path


@pytest.fixture()
def probe_file(tmp_path):
    path = tmp_path / "probes.txt"
    path.write_text("\n".join(PROBE_LINES) + "\n", encoding="utf-8")
    return path
