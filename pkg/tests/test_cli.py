import random

import pytest

from bht.cli import main
from bht.element import TableElement
from bht.textio import format_clopen, format_table, format_vpair, parse_clopen, parse_table, parse_witness
from bht.vembed import binary_space
from util import B, V2, V3, clp


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


@pytest.fixture
def swap_file(tmp_path):
    swap = TableElement(V2, [(B(0, "0"), B(0, "1")), (B(0, "1"), B(0, "0"))])
    return write(tmp_path, "swap.tbl", format_table(swap))


@pytest.fixture
def id_file(tmp_path):
    from bht.element import identity

    return write(tmp_path, "id.tbl", format_table(identity(V2)))


def test_eq_and_compose(capsys, tmp_path, swap_file, id_file):
    code, out, _ = run(capsys, "eq", id_file, id_file)
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "eq", swap_file, id_file)
    assert code == 0 and out.strip() == "false"
    code, out, _ = run(capsys, "compose", swap_file, swap_file)
    assert code == 0
    assert parse_table(out).cells == ((B(0, "e"), B(0, "e")),)
    code, out, _ = run(capsys, "invert", swap_file)
    assert code == 0 and parse_table(out) == parse_table(open(swap_file).read())


def test_order_support_apply(capsys, tmp_path):
    a = TableElement(
        V2,
        [(B(0, "0"), B(0, "00")), (B(0, "10"), B(0, "01")), (B(0, "11"), B(0, "1"))],
    )
    path = write(tmp_path, "a.tbl", format_table(a))
    code, out, _ = run(capsys, "order", path, "--max", "8")
    assert code == 0 and out.strip() == "exceeds bound"
    code, out, _ = run(capsys, "support", path)
    assert code == 0 and parse_clopen(out) == V2.full()
    code, out, _ = run(capsys, "apply", path, "--point", "root:0 e(10)")
    assert code == 0 and out.strip() == "root:0 01(10)"


def test_witness_commands_then_verify(capsys, tmp_path):
    files = {
        "X.clp": format_clopen(clp(V2, "0")),
        "Y1.clp": format_clopen(clp(V2, "00")),
        "Y2.clp": format_clopen(clp(V2, "01")),
        "A.clp": format_clopen(clp(V2, "0")),
        "B.clp": format_clopen(clp(V2, "1")),
        "full.clp": format_clopen(V2.full()),
    }
    paths = {name: write(tmp_path, name, text) for name, text in files.items()}

    for argv in (
        ["compress", paths["full.clp"], paths["X.clp"]],
        ["double", paths["X.clp"]],
        ["between", paths["A.clp"], paths["B.clp"]],
        ["vigor", paths["X.clp"], paths["Y1.clp"], paths["Y2.clp"]],
    ):
        code, out, _ = run(capsys, *argv)
        assert code == 0, argv
        wfile = write(tmp_path, "w.txt", out)
        code, out2, _ = run(capsys, "verify", wfile)
        assert code == 0, (argv, out2)
        assert "FAIL" not in out2
        assert all(line.startswith("ok ") for line in out2.strip().splitlines())


def test_multisection_and_conjugates_verify(capsys, tmp_path, swap_file):
    x = write(tmp_path, "x0.clp", format_clopen(clp(V3, "0")))
    y = write(tmp_path, "x1.clp", format_clopen(clp(V3, "1")))
    z = write(tmp_path, "x2.clp", format_clopen(clp(V3, "2")))
    code, out, _ = run(capsys, "multisection", x, y, z)
    assert code == 0
    wfile = write(tmp_path, "m.txt", out)
    code, out2, _ = run(capsys, "verify", wfile)
    assert code == 0 and "FAIL" not in out2

    code, out, _ = run(capsys, "conjugates", swap_file, "--count", "3")
    assert code == 0
    wfile = write(tmp_path, "c.txt", out)
    code, out2, _ = run(capsys, "verify", wfile)
    assert code == 0 and "FAIL" not in out2


def test_compressibility_commands(capsys, tmp_path):
    u1 = write(tmp_path, "u1.clp", format_clopen(clp(V2, "10")))
    u2 = write(tmp_path, "u2.clp", format_clopen(clp(V2, "11")))
    code, out, _ = run(capsys, "compressibility", "--point", "root:0 e(0)",
                       "--cond", "2", u1, u2)
    assert code == 0
    wfile = write(tmp_path, "c2.txt", out)
    code, out2, _ = run(capsys, "verify", wfile)
    assert code == 0 and "FAIL" not in out2

    u2b = write(tmp_path, "u2b.clp", format_clopen(clp(V2, "110")))
    u3 = write(tmp_path, "u3.clp", format_clopen(clp(V2, "111")))
    code, out, _ = run(capsys, "compressibility", "--point", "root:0 e(0)",
                       "--cond", "3", u1, u2b, u3)
    assert code == 0
    wfile = write(tmp_path, "c3.txt", out)
    code, out2, _ = run(capsys, "verify", wfile)
    assert code == 0 and "FAIL" not in out2

    # condition 1 with an element supported away from the point
    from bht.witness import vigor_witness

    g = vigor_witness(clp(V2, "1"), clp(V2, "10"), clp(V2, "11"))
    gfile = write(tmp_path, "g.tbl", format_table(g))
    code, out, _ = run(capsys, "compressibility", "--point", "root:0 e(0)",
                       "--cond", "1", gfile)
    assert code == 0
    wfile = write(tmp_path, "c1.txt", out)
    code, out2, _ = run(capsys, "verify", wfile)
    assert code == 0 and "FAIL" not in out2


def test_embed_v_command(capsys, tmp_path):
    x = write(tmp_path, "x.clp", format_clopen(clp(V3, "0")))
    v = TableElement(binary_space(), [(B(0, "0"), B(0, "1")), (B(0, "1"), B(0, "0"))])
    vfile = write(tmp_path, "v.vpair", format_vpair(v))
    code, out, _ = run(capsys, "embed-v", "--space", "1,3,1", "--support", x, vfile)
    assert code == 0
    wfile = write(tmp_path, "e.txt", out)
    code, out2, _ = run(capsys, "verify", wfile)
    assert code == 0 and "FAIL" not in out2


def test_table_commands(capsys):
    code, out, _ = run(capsys, "homology", "--space", "2,3,5", "--degree", "1")
    assert code == 0 and out.strip() == "Z_2"
    code, out, _ = run(capsys, "abelianization", "--space", "2,7,1")
    assert code == 0 and out.strip() == "Z_12"
    code, out, _ = run(capsys, "characters", "--space", "1,3,1")
    assert code == 0 and "1 of order 2" in out
    code, out, _ = run(capsys, "perfect", "--space", "2,2,3,1")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "--porcelain", "homology", "--space", "2,3,5", "--degree", "1")
    assert code == 0 and "group=Z_2" in out


def test_exit_codes(capsys, tmp_path):
    bad = write(tmp_path, "bad.clp", "garbage\n")
    code, _, err = run(capsys, "double", bad)
    assert code == 2 and "parse error" in err
    a = write(tmp_path, "a.clp", format_clopen(clp(V3, "0")))
    b = write(tmp_path, "b.clp", format_clopen(clp(V3, "1", "2")))
    code, _, err = run(capsys, "between", a, b)
    assert code == 1 and "class mismatch" in err
    code, _, err = run(capsys, "abelianization", "--space", "2,3,5,1")
    assert code == 1 and "not" in err


def test_byte_stable_output(capsys, tmp_path):
    x = write(tmp_path, "x.clp", format_clopen(clp(V2, "0")))
    code, out1, _ = run(capsys, "double", x)
    code, out2, _ = run(capsys, "double", x)
    assert out1 == out2
    assert out1.endswith("\n")
    assert "\r" not in out1


def _mutation_fuzz(capsys, tmp_path, rng, witness_text, rounds):
    lines = witness_text.splitlines()
    rejected = 0
    for _ in range(rounds):
        mutated = lines[:]
        i = rng.randrange(len(mutated))
        line = mutated[i]
        if "root:" in line:
            mutated[i] = line.replace("0", "1", 1) if "0" in line else line.replace("1", "0", 1)
        else:
            mutated[i] = line + "x"
        wfile = write(tmp_path, "mut.txt", "\n".join(mutated) + "\n")
        code = main(["verify", wfile])
        capsys.readouterr()
        if code != 0:
            rejected += 1
    return rejected


def test_verify_rejects_mutated_witnesses(capsys, tmp_path):
    x = write(tmp_path, "x.clp", format_clopen(clp(V2, "0")))
    y1 = write(tmp_path, "y1.clp", format_clopen(clp(V2, "00")))
    y2 = write(tmp_path, "y2.clp", format_clopen(clp(V2, "01")))
    code, out, _ = run(capsys, "vigor", x, y1, y2)
    assert code == 0
    rng = random.Random(911)
    # most random single-line mutations must be caught (some lines are
    # comments or benign); none may silently verify a wrong claim
    assert _mutation_fuzz(capsys, tmp_path, rng, out, 30) >= 20


def test_verify_rejects_mutations_across_kinds(capsys, tmp_path):
    rng = random.Random(913)
    x = write(tmp_path, "x.clp", format_clopen(clp(V3, "0")))
    y = write(tmp_path, "y.clp", format_clopen(clp(V3, "1")))
    z = write(tmp_path, "z.clp", format_clopen(clp(V3, "2")))
    full = write(tmp_path, "f.clp", format_clopen(V3.full()))
    outputs = []
    for argv in (
        ["compress", full, x],
        ["between", x, y],
        ["multisection", x, y, z],
        ["embed-v", "--space", "1,3,1", "--support", x],
    ):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        outputs.append(out)
    total = sum(_mutation_fuzz(capsys, tmp_path, rng, out, 15) for out in outputs)
    assert total >= 40
