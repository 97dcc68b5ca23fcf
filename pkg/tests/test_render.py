from stoimenow.cli import capture
from stoimenow.matchings import EMPTY, parse_matching
from stoimenow.posets import Poset
from stoimenow.render import render_dyck, render_matching, render_poset


def test_single_arc():
    lines = render_matching(parse_matching("1-2")).splitlines()
    assert lines[0] == "+---+"
    assert lines[-1].split() == ["1", "2"]


def test_nested_rows_and_crossings():
    lines = render_matching(parse_matching("1-3,2-5,4-6")).splitlines()
    # three arcs need two rows plus the point and label lines
    assert len(lines) == 4
    assert render_matching(EMPTY) == "(empty matching)"


def test_dyck_profile():
    assert render_dyck("UUDD") == " /\\\n/  \\"
    assert len(render_dyck("UUUDDD").splitlines()) == 3
    assert render_dyck("") == "(empty path)"


def test_poset_levels():
    text = render_poset(Poset.chain(3))
    assert text.splitlines()[:3] == ["level 2: 3", "level 1: 2", "level 0: 1"]
    assert text.endswith("covers: 1<2, 2<3")
    assert render_poset(Poset.antichain(2)).endswith("covers: none")


def test_render_command_detects_kind():
    assert capture(["render", "--input", "UUDD"])[1] == render_dyck("UUDD") + "\n"
    assert capture(["render", "--input", "1-2"])[1] == render_matching(parse_matching("1-2")) + "\n"
    assert capture(["render", "--input", "3:1<2,2<3"])[1] == render_poset(Poset.chain(3)) + "\n"
